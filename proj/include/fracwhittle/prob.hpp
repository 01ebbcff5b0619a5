#pragma once

namespace fracwhittle {

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal quantile on (0, 1). Wichura's AS 241 (PPND16) rational
/// approximation, accurate to about 1e-16; fully deterministic, no libm
/// inverse-erf dependency.
double normal_quantile(double p);

/// z-value for a central confidence interval at the given level. The
/// default 95% level returns the pinned constant 1.959964 exactly.
double ci_z_value(double level);

} // namespace fracwhittle
