"""Campaign configuration models and loaders."""
