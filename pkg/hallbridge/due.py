"""
Safe import of duecredit.

If duecredit is not installed (or fails to import), `due` is a collector that
records nothing and `Doi`, `BibTeX`, `Text` and `Url` return None, so citations
can be declared throughout the package unconditionally:

    from .due import due, Doi
"""

import logging


class InactiveDueCreditCollector:
    """Collector used when duecredit is unavailable."""

    active = False

    def _ignore(self, *args, **kwargs):
        return None

    activate = add = cite = dump = load = _ignore

    def dcite(self, *args, **kwargs):
        """Return a decorator leaving the function untouched."""
        return lambda func: func

    def __repr__(self):
        return f"{type(self).__name__}()"


def _ignore_reference(*args, **kwargs):
    return None


try:
    from duecredit import BibTeX, Doi, Text, Url, due  # noqa: F401

    if not hasattr(due, "cite"):
        raise RuntimeError("Imported due lacks .cite, duecredit is disabled.")
except Exception as exc:
    if not isinstance(exc, ImportError):
        logging.getLogger("duecredit").error(f"Failed to import duecredit: {exc}")
    due = InactiveDueCreditCollector()
    BibTeX = Doi = Url = Text = _ignore_reference
