#include "prohecke/lattice.hpp"

#include <cstdlib>

namespace prohecke {

SmithForm smith_normal_form(const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithForm s;
  s.d = a;
  s.u = Mat::Identity(rows, rows);
  s.v = Mat::Identity(cols, cols);
  Mat& d = s.d;

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero entry in the remaining block.
    for (;;) {
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (d(i, j) != 0 && (pr < 0 || std::llabs(d(i, j)) < std::llabs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;
      d.row(t).swap(d.row(pr));
      s.u.row(t).swap(s.u.row(pr));
      d.col(t).swap(d.col(pc));
      s.v.col(t).swap(s.v.col(pc));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        const std::int64_t f = d(i, t) / d(t, t);
        d.row(i) -= f * d.row(t);
        s.u.row(i) -= f * s.u.row(t);
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        const std::int64_t f = d(t, j) / d(t, t);
        d.col(j) -= f * d.col(t);
        s.v.col(j) -= f * s.v.col(t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition on the remaining block.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i) {
        for (Eigen::Index j = t + 1; j < cols && divides; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            s.u.row(t) += s.u.row(i);
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.row(t) *= -1;
      s.u.row(t) *= -1;
    }
  }
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    if (d(t, t) != 0) s.invariants.push_back(d(t, t));
  }
  return s;
}

}  // namespace prohecke
