#pragma once

namespace sprforge {

/// Numerical thresholds shared by every certificate-producing routine.
/// All values are relative to the natural scale of the quantity they guard
/// unless noted otherwise. Certificates record the configuration they were
/// produced with.
struct Tolerances {
  double strip = 1e-12;     ///< leading/trailing coefficient strip, relative
  double pos = 1e-9;        ///< positivity margin used by oracle concordance
  double stab = 1e-9;       ///< stability margin (distance to the imaginary axis)
  double sign = 1e-10;      ///< relative sign-decision threshold (escalates below)
  double lambda = 1e-8;     ///< crossing back-solve agreement between even/odd parts
  double residual = 1e-8;   ///< witness residual acceptance, relative
  double tangency = 1e-8;   ///< tangency residual for ellipse/line contact
};

}  // namespace sprforge
