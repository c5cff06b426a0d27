#include "rees/analysis/cm_report.hpp"

#include "rees/errors.hpp"

namespace rees {

CMReport cm_report(Mode mode, int n, int d) {
  if (n < 2 || d < 2) throw Error(ErrorKind::InvalidArgument, "cm_report needs n >= 2 and d >= 2");
  CMReport r;
  r.mode = mode;
  r.n = n;
  r.d = d;
  if (mode == Mode::Standard) {
    r.dim_rees = n + 1;
    r.depth_rees = d <= n ? n + 1 : n;
  } else {
    r.dim_rees = n + 2;
    r.depth_rees = d <= n + 1 ? n + 2 : n + 1;
  }
  r.is_cm = r.depth_rees == r.dim_rees;
  r.is_almost_cm = r.dim_rees - r.depth_rees <= 1;
  return r;
}

std::string CMReport::to_text() const {
  const std::string bound = mode == Mode::Standard ? "n=" + std::to_string(n) : "n+1=" + std::to_string(n + 1);
  std::string out = "dim=" + std::to_string(dim_rees) + " depth=" + std::to_string(depth_rees) +
                    " CM=" + (is_cm ? "yes" : "no") + " (d=" + std::to_string(d) + (is_cm ? " ≤ " : " > ") + bound +
                    ")\n";
  out += std::string("almost-CM=") + (is_almost_cm ? "yes" : "no") + " (per closed formula)\n";
  return out;
}

}  // namespace rees
