// Python bindings: numpy blocks in, certificate structs out.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holdercert/error.hpp"
#include "holdercert/holdercore.hpp"
#include "holdercert/oracle.hpp"
#include "holdercert/rng.hpp"
#include "holdercert/tracealg.hpp"

namespace py = pybind11;

namespace holdercert {
namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_array(const ComplexArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
    throw py::value_error("expected a square 2-d array");
  const int n = static_cast<int>(arr.shape(0));
  ComplexMatrix m(n);
  auto view = arr.unchecked<2>();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = view(i, j);
  return m;
}

py::array_t<Complex> array_from_matrix(const ComplexMatrix& m) {
  const int n = m.dim();
  py::array_t<Complex> arr({n, n});
  auto view = arr.mutable_unchecked<2>();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) view(i, j) = m(i, j);
  return arr;
}

BlockOperator operator_from_blocks(const TraceAlgebra& alg,
                                   const std::vector<ComplexArray>& blocks) {
  std::vector<ComplexMatrix> mats;
  mats.reserve(blocks.size());
  for (const auto& b : blocks) mats.push_back(matrix_from_array(b));
  BlockOperator x(std::move(mats));
  ensure_conforms(alg, x, "from_blocks");
  return x;
}

py::list blocks_as_arrays(const BlockOperator& x) {
  py::list out;
  for (const auto& b : x.blocks()) out.append(array_from_matrix(b));
  return out;
}

std::string algebra_repr(const TraceAlgebra& alg) {
  std::string out = "TraceAlgebra(block_dims=[";
  for (size_t k = 0; k < alg.block_dims.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(alg.block_dims[k]);
  }
  out += "], weights=[";
  for (size_t k = 0; k < alg.weights.size(); ++k) {
    if (k) out += ", ";
    out += py::cast<std::string>(py::repr(py::float_(alg.weights[k])));
  }
  return out + "])";
}

}  // namespace
}  // namespace holdercert

PYBIND11_MODULE(_core, m) {
  using namespace holdercert;

  m.doc() = "Trace p-norms and equality certificates on weighted block algebras";
  m.attr("__version__") = "0.1.0";

  static py::exception<Error> kernel_error(m, "KernelError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(error_code_name(e.code())) + ": " + e.what();
      py::set_error(kernel_error, msg.c_str());
    }
  });

  py::class_<TraceAlgebra>(m, "TraceAlgebra",
                           "Block-diagonal *-algebra with weighted trace "
                           "tau(x) = sum_k weights[k] * Tr(x_k)")
      .def(py::init<std::vector<int>, std::vector<double>>(), py::arg("block_dims"),
           py::arg("weights"))
      .def_readonly("block_dims", &TraceAlgebra::block_dims)
      .def_readonly("weights", &TraceAlgebra::weights)
      .def_property_readonly("block_count", &TraceAlgebra::block_count)
      .def(py::self == py::self)
      .def("__repr__", &algebra_repr);

  py::class_<BlockOperator>(m, "BlockOperator",
                            "Element of a block-diagonal algebra: one square complex "
                            "block per summand")
      .def(py::init(&operator_from_blocks), py::arg("algebra"), py::arg("blocks"),
           "Build from a list of square complex arrays, one per block")
      .def_static("zero", &BlockOperator::zero, py::arg("algebra"))
      .def_static("identity", &BlockOperator::identity, py::arg("algebra"))
      .def_property_readonly("block_count", &BlockOperator::block_count)
      .def("blocks", &blocks_as_arrays, "Blocks as a list of fresh numpy arrays")
      .def("block", [](const BlockOperator& x, int k) { return array_from_matrix(x.block(k)); },
           py::arg("k"))
      .def("adjoint", &BlockOperator::adjoint)
      .def("is_zero", &BlockOperator::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(Complex() * py::self)
      .def(py::self * Complex());

  py::enum_<EqualityStatus>(m, "EqualityStatus")
      .value("Equality", EqualityStatus::Equality)
      .value("StrictInequality", EqualityStatus::StrictInequality)
      .value("Indeterminate", EqualityStatus::Indeterminate);

  py::enum_<OperatorKind>(m, "OperatorKind")
      .value("Ginibre", OperatorKind::Ginibre)
      .value("Positive", OperatorKind::Positive)
      .value("Unitary", OperatorKind::Unitary)
      .value("Hermitian", OperatorKind::Hermitian)
      .value("EqualityPair", OperatorKind::EqualityPair);

  py::class_<HolderReport>(m, "HolderReport")
      .def_readonly("p", &HolderReport::p)
      .def_readonly("q", &HolderReport::q)
      .def_readonly("lhs", &HolderReport::lhs)
      .def_readonly("rhs", &HolderReport::rhs)
      .def_readonly("gap", &HolderReport::gap)
      .def_readonly("relative_gap", &HolderReport::relative_gap);

  py::class_<EqualityCertificate>(m, "EqualityCertificate")
      .def_readonly("status", &EqualityCertificate::status)
      .def_readonly("deviation", &EqualityCertificate::deviation)
      .def_readonly("lambda_", &EqualityCertificate::lambda)
      .def_readonly("tolerance", &EqualityCertificate::tolerance)
      .def_readonly("reason", &EqualityCertificate::reason)
      .def_readonly("report", &EqualityCertificate::report);

  py::class_<CauchySchwarzCertificate>(m, "CauchySchwarzCertificate")
      .def_readonly("holds", &CauchySchwarzCertificate::holds)
      .def_readonly("equality", &CauchySchwarzCertificate::equality)
      .def_readonly("has_lambda", &CauchySchwarzCertificate::has_lambda)
      .def_readonly("lambda_", &CauchySchwarzCertificate::lambda)
      .def_readonly("inner_real", &CauchySchwarzCertificate::inner_real)
      .def_readonly("inner_abs", &CauchySchwarzCertificate::inner_abs)
      .def_readonly("norm_product", &CauchySchwarzCertificate::norm_product)
      .def_readonly("residual", &CauchySchwarzCertificate::residual)
      .def_readonly("residual_bound", &CauchySchwarzCertificate::residual_bound)
      .def_readonly("tolerance", &CauchySchwarzCertificate::tolerance);

  py::class_<TracePositivityCertificate>(m, "TracePositivityCertificate")
      .def_readonly("holds", &TracePositivityCertificate::holds)
      .def_readonly("equality", &TracePositivityCertificate::equality)
      .def_readonly("positive", &TracePositivityCertificate::positive)
      .def_readonly("trace_abs", &TracePositivityCertificate::trace_abs)
      .def_readonly("trace_modulus", &TracePositivityCertificate::trace_modulus)
      .def_readonly("tolerance", &TracePositivityCertificate::tolerance);

  py::class_<SwapNormalize>(m, "SwapNormalize")
      .def_readonly("p_eff", &SwapNormalize::p_eff)
      .def_readonly("swapped", &SwapNormalize::swapped);

  py::class_<ProofChainTrace>(m, "ProofChainTrace")
      .def_readonly("normalized_a", &ProofChainTrace::normalized_a)
      .def_readonly("normalized_b", &ProofChainTrace::normalized_b)
      .def_readonly("w", &ProofChainTrace::w)
      .def_readonly("x", &ProofChainTrace::x)
      .def_readonly("y", &ProofChainTrace::y)
      .def_readonly("p", &ProofChainTrace::p)
      .def_readonly("p_eff", &ProofChainTrace::p_eff)
      .def_readonly("swapped", &ProofChainTrace::swapped)
      .def_readonly("r", &ProofChainTrace::r)
      .def_readonly("r_prime", &ProofChainTrace::r_prime)
      .def_readonly("s0", &ProofChainTrace::s0)
      .def_readonly("s1", &ProofChainTrace::s1)
      .def_readonly("s2", &ProofChainTrace::s2)
      .def_readonly("s3", &ProofChainTrace::s3)
      .def_readonly("slacks", &ProofChainTrace::slacks)
      .def_readonly("chain_ok", &ProofChainTrace::chain_ok)
      .def_readonly("exponent_identity_error", &ProofChainTrace::exponent_identity_error);

  py::class_<POneCertificate>(m, "POneCertificate")
      .def_readonly("equality", &POneCertificate::equality)
      .def_readonly("condition", &POneCertificate::condition)
      .def_readonly("lhs", &POneCertificate::lhs)
      .def_readonly("rhs", &POneCertificate::rhs)
      .def_readonly("spectral_defect", &POneCertificate::spectral_defect)
      .def_readonly("commutation_defect", &POneCertificate::commutation_defect)
      .def_readonly("tolerance", &POneCertificate::tolerance);

  m.def("trace", &trace, py::arg("algebra"), py::arg("x"),
        "Weighted trace tau(x) = sum_k weights[k] * Tr(x_k)");
  m.def("inner", &inner, py::arg("algebra"), py::arg("x"), py::arg("y"),
        "Weighted Hilbert-Schmidt pairing tau(x y*)");
  m.def("pnorm", &pnorm, py::arg("algebra"), py::arg("x"), py::arg("p"),
        "Schatten norm (tau |x|^p)^(1/p); p = inf gives the operator norm");
  m.def("opnorm", &opnorm, py::arg("algebra"), py::arg("x"),
        "Largest singular value over all blocks");
  m.def("conjugate_exponent", &conjugate_exponent, py::arg("p"),
        "q with 1/p + 1/q = 1; maps 1 to inf and back");
  m.def("modulus", py::overload_cast<const BlockOperator&>(&modulus), py::arg("x"),
        "|x| = (x* x)^(1/2), blockwise");
  m.def("power", py::overload_cast<const BlockOperator&, double>(&power), py::arg("x"),
        py::arg("t"), "Fractional power of a positive operator; power(x, 0) is the support");
  m.def("range_projection", py::overload_cast<const BlockOperator&>(&range_projection),
        py::arg("x"), "Orthogonal projection onto the column space, blockwise");

  m.def("holder_report", &holder_report, py::arg("algebra"), py::arg("a"), py::arg("b"),
        py::arg("p"), "Evaluate ||ab*||_1 against ||a||_p * ||b||_q");
  m.def("modulus_reduction_check", &modulus_reduction_check, py::arg("algebra"), py::arg("a"),
        py::arg("b"), "(||ab*||_1, || |a||b| ||_1); the two agree");
  m.def("cauchy_schwarz_certify", &cauchy_schwarz_certify, py::arg("algebra"), py::arg("x"),
        py::arg("y"), py::arg("tol") = kDefaultCertTol);
  m.def("trace_positivity_certify", &trace_positivity_certify, py::arg("algebra"), py::arg("a"),
        py::arg("tol") = kDefaultCertTol);
  m.def("swap_normalize", &swap_normalize, py::arg("p"),
        "Fold p > 2 onto the conjugate side so the effective exponent lies in (1, 2]");
  m.def("equality_certify", &equality_certify, py::arg("algebra"), py::arg("a"), py::arg("b"),
        py::arg("p"), py::arg("tol") = kDefaultCertTol,
        "Decide equality in ||ab*||_1 <= ||a||_p ||b||_q via the density deviation");
  m.def("dual_witness", &dual_witness, py::arg("algebra"), py::arg("a"), py::arg("p"),
        "Unit-q-norm operator attaining Re tau(ab*) = ||a||_p");
  m.def("proof_replay", &proof_replay, py::arg("algebra"), py::arg("a"), py::arg("b"),
        py::arg("p"), "Replay the inequality chain on the normalized pair");
  m.def("p_one_boundary_certify", &p_one_boundary_certify, py::arg("algebra"), py::arg("a"),
        py::arg("b"), py::arg("tol") = kDefaultCertTol,
        "Boundary case p = 1, q = inf: support projection against the top spectral set");

  m.def(
      "random_operator",
      [](const TraceAlgebra& alg, std::uint64_t seed, OperatorKind kind, double scale) {
        return random_operator(alg, GeneratorSpec{seed, kind, scale});
      },
      py::arg("algebra"), py::arg("seed"), py::arg("kind") = OperatorKind::Ginibre,
      py::arg("scale") = 1.0,
      "Seeded operator draw; same (seed, kind, scale, algebra) reproduces the same bytes");
  m.def("random_equality_pair", &random_equality_pair, py::arg("algebra"), py::arg("seed"),
        py::arg("scale"), py::arg("p"),
        "Pair (a, b) attaining equality at exponent p, with randomized polar parts");
  m.def("dual_norm_search", &dual_norm_search, py::arg("algebra"), py::arg("a"), py::arg("p"),
        py::arg("budget"), py::arg("seed"),
        "Brute-force lower estimate of sup { |tau(ab*)| : ||b||_q = 1 }");
  m.def(
      "integer_power_check",
      [](const ComplexArray& arr, int k) { return integer_power_check(matrix_from_array(arr), k); },
      py::arg("matrix"), py::arg("k"),
      "||power(m, k) - m*m*...*m||_F with k literal factors (k = 0 checks the support)");
  m.def("derive_seed", &derive_seed, py::arg("seed"), py::arg("index"),
        "Child seed for trial `index` of a seeded batch");
}
