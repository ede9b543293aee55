__version__ = "0.1.0"

USER_AGENT = f"mementoscope/{__version__}"
