"""Bipolar assumption-based argumentation over mined argument graphs.

Mining turns documents into support/attack graphs, the core turns graphs
into frameworks, the solver enumerates extensions through a SAT backend,
and the verification layer reports fact contradictions and weak links.
"""

__version__ = "0.1.0"
