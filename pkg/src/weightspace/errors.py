"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class PipelineError(RuntimeError):
    """No candidate transform could be evaluated."""

    def __init__(self, reasons):
        self.reasons = dict(reasons)
        detail = "; ".join(f"{name}: {why}" for name, why in self.reasons.items())
        super().__init__(f"all candidate transforms were skipped ({detail})")
