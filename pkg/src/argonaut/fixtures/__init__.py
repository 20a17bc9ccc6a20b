"""Bundled synthetic corpora with planted relation labels.

risk.md mines to a support-dominant graph (attack:support exactly 1:12),
debate.md to an adversarial one (exactly 1:4), and facts.md plants
contradictions that multiply the risk graph's attack count when ingested.
"""

from importlib import resources
from pathlib import Path


def fixture_path(name: str) -> Path:
    with resources.as_file(resources.files(__package__) / name) as path:
        return Path(path)


RISK = "risk.md"
DEBATE = "debate.md"
FACTS = "facts.md"
