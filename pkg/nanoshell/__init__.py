"""Анізотропна пружна оболонкова модель хіральних вуглецевих нанотрубок."""

__version__ = "0.1.0"
