"""Runner package re-exports for easy imports from `src.twistdeform.runner`."""
from .runner import (
    CONVENTION,
    Task,
    build_tasks,
    contraction_summary,
    emit_spacetime_tables,
    execute_task,
    load_config,
    merge_overrides,
    render_contraction_text,
    render_json,
    render_tables_text,
    render_text,
    resolve_indices,
    run,
)

__all__ = [
    "CONVENTION",
    "Task",
    "build_tasks",
    "contraction_summary",
    "emit_spacetime_tables",
    "execute_task",
    "load_config",
    "merge_overrides",
    "render_contraction_text",
    "render_json",
    "render_tables_text",
    "render_text",
    "resolve_indices",
    "run",
]

# re-export exceptions
from .runner import ConfigurationError
__all__.extend(["ConfigurationError"])
