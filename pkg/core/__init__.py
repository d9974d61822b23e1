# Experiment runner: result envelopes, schemas and management commands
