"""kfcert: certification of k-factor-criticality conditions for t-connected graphs."""

__version__ = "0.1.0"
