"""Command-line surface for degseq."""
