from .rational_text import RationalParseError, RationalText
from .report_formatters import ReportFormatter

__all__ = ['RationalParseError', 'RationalText', 'ReportFormatter']
