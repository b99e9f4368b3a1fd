from fractions import Fraction


class PowerSeries(object):
    """Series truncated at a fixed order: coefficients[k] multiplies var**k for k <= truncation_order."""

    def __init__(self, coefficients):
        coefficients = [Fraction(c) for c in coefficients]
        if not coefficients:
            raise ValueError("A truncated series needs at least its constant coefficient")
        self._coefficients = tuple(coefficients)

    @property
    def coefficients(self):
        return list(self._coefficients)

    @property
    def truncation_order(self):
        return len(self._coefficients) - 1

    def __getitem__(self, k):
        return self._coefficients[k]

    def __len__(self):
        return len(self._coefficients)

    def compose_power(self, n, order):
        """Series of f(var**n), truncated at order."""
        coefficients = [Fraction(0)] * (order + 1)
        for k, c in enumerate(self._coefficients):
            if k * n > order:
                break
            coefficients[k * n] = c
        return PowerSeries(coefficients)

    def derivative(self):
        if self.truncation_order == 0:
            raise ValueError("Differentiating a series truncated at order 0 leaves no known terms")
        return PowerSeries([k * c for k, c in enumerate(self._coefficients) if k])

    def multiply(self, polynomial):
        """Product with a polynomial, kept to the same truncation order."""
        order = self.truncation_order
        coefficients = [Fraction(0)] * (order + 1)
        for degree, c in enumerate(polynomial.coefficients):
            if not c:
                continue
            for k in range(order + 1 - degree):
                coefficients[k + degree] += c * self._coefficients[k]
        return PowerSeries(coefficients)

    def __add__(self, other):
        order = min(self.truncation_order, other.truncation_order)
        return PowerSeries([a + b for a, b in zip(self._coefficients[:order + 1], other._coefficients)])

    def __neg__(self):
        return PowerSeries([-c for c in self._coefficients])

    def __sub__(self, other):
        return self + (-other)

    def leading_order(self):
        """Index of the first nonzero coefficient, or None when every known coefficient vanishes."""
        return next((k for k, c in enumerate(self._coefficients) if c), None)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coefficients == other._coefficients

    def to_json(self):
        return [str(c) for c in self._coefficients]

    def __repr__(self):
        return "<PowerSeries order {0}: {1}>".format(self.truncation_order, ', '.join(str(c) for c in
                                                                                   self._coefficients[:6]))
