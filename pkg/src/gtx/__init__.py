"""Exact verification engine for Gelfand-Tsetlin modules of gl_n / sl_n."""

__version__ = "0.1.0"
