"""Batch static analysis for Java-subset projects.

Scans a project tree, lexes and parses the Java-subset sources, assembles an
application/package/class semantic model, computes size, complexity, and
inheritance metrics under a goal-question-metric plan, and renders
relationship graphs (DOT), a file treemap, and summary charts (SVG), all as
deterministic text documents.
"""

__version__ = "0.1.0"
