"""Category O engine for D(2|1;zeta) - exact arithmetic, Verma flags and verification suites."""
