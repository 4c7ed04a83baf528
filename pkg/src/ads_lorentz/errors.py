class DomainError(ValueError):
    """An argument lies outside the region where an operation is defined."""


class NonFiniteState(ArithmeticError):
    """A numerical integration produced a NaN or infinite value."""


class NoOptimalTrajectory(Exception):
    """The target has no optimal trajectory from the base point.

    ``region`` holds the :class:`~ads_lorentz.expmap.ReachabilityClass` of the
    target and ``distance`` its Lorentzian distance.
    """

    def __init__(self, region, distance: float):
        self.region = region
        self.distance = distance
        super().__init__(f"{region.tag.value}: distance={distance}")
