from .logger import JsonFormatter, LoggerService

__all__ = ["JsonFormatter", "LoggerService"]
