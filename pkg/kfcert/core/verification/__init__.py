"""
Theorem verifiers, random t-connected graphs and counterexample campaigns.

Submodules are imported directly (``from kfcert.core.verification.theorems
import verify_thm4``); ``config.schema`` depends on ``data_models`` here.
"""
