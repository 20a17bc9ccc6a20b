from argonaut.verify.factcheck import (
    Corroboration,
    FactCheckEntry,
    FactCheckReport,
    fact_check,
)
from argonaut.verify.feedback import (
    NO_FINDINGS,
    AttackChain,
    DepthConfig,
    FeedbackReport,
    LiteralFinding,
    WeakLink,
    analyze_graph,
    build_feedback,
    feedback_file_text,
    find_undefended_attacks,
    render_feedback_message,
    select_key_literals,
    support_ancestry,
)

__all__ = [
    "Corroboration",
    "FactCheckEntry",
    "FactCheckReport",
    "fact_check",
    "NO_FINDINGS",
    "AttackChain",
    "DepthConfig",
    "FeedbackReport",
    "LiteralFinding",
    "WeakLink",
    "analyze_graph",
    "build_feedback",
    "feedback_file_text",
    "find_undefended_attacks",
    "render_feedback_message",
    "select_key_literals",
    "support_ancestry",
]
