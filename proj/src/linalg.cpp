#include "hysturm/linalg.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace hysturm::linalg {

namespace {
[[noreturn]] void fail(const char* routine, int info) {
  throw std::runtime_error(std::string(routine) + " failed, info=" +
                           std::to_string(info));
}
}  // namespace

SymEig sym_eig(const Eigen::MatrixXd& a, bool vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  SymEig out;
  out.values.resize(n);
  Eigen::MatrixXd work = a;
  lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n,
                     work.data(), n, out.values.data());
  if (info != 0) fail("dsyevd", info);
  if (vectors) out.vectors = std::move(work);
  return out;
}

SymEig sym_gen_eig(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                   bool vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  SymEig out;
  out.values.resize(n);
  Eigen::MatrixXd aw = a;
  Eigen::MatrixXd bw = b;
  lapack_int info =
      LAPACKE_dsygvd(LAPACK_COL_MAJOR, 1, vectors ? 'V' : 'N', 'L', n,
                     aw.data(), n, bw.data(), n, out.values.data());
  if (info != 0) fail("dsygvd", info);
  if (vectors) out.vectors = std::move(aw);
  return out;
}

ComplexEig complex_eig(const Eigen::MatrixXcd& a, bool vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  ComplexEig out;
  out.values.resize(n);
  Eigen::MatrixXcd work = a;
  Eigen::MatrixXcd vr;
  if (vectors) vr.resize(n, n);
  lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', vectors ? 'V' : 'N', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(out.values.data()), nullptr, 1,
      vectors ? reinterpret_cast<lapack_complex_double*>(vr.data()) : nullptr,
      vectors ? n : 1);
  if (info != 0) fail("zgeev", info);
  if (vectors) out.vectors = std::move(vr);
  return out;
}

}  // namespace hysturm::linalg
