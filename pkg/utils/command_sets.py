"""
Centralised lists of recognised command words.
Edit here if you want to add a subcommand or an audited statement.
"""

# property checkers reading a space file
file_commands = (
    "validate", "compact", "subcover", "hausdorff", "continuous",
    "openmap", "closedmap", "fip", "closed", "format", "recheck",
)

# commands driven by the seeded instance generator
generator_commands = ("generate", "audit")

all_commands = file_commands + generator_commands

# membership readings of "x belongs to (f, A)"
rule_names = ("some-positive", "all-positive", "all-one")

# subcover search strategies
mode_names = ("exact", "greedy")

# audited statements, in report order
theorem_ids = ("prop3.5", "prop3.7", "thm3.8", "thm3.10", "thm3.12")
all_theorems = "all"

# statements whose hypotheses involve the membership rule
rule_sensitive_theorems = {"prop3.7", "thm3.10"}

