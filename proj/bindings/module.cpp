#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qc/factorseq.hpp"
#include "qc/schubert.hpp"
#include "qc/stanley.hpp"

namespace py = pybind11;

namespace {

std::vector<int> parts_of(const qc::Partition& p) { return p.parts(); }

py::dict schur_dict(const qc::SchurElement& f) {
  py::dict out;
  for (const auto& [shape, c] : f.terms())
    out[py::tuple(py::cast(shape.parts()))] = py::int_(py::str(c.str()));
  return out;
}

py::dict tensor_dict(const qc::TensorElement& p) {
  py::dict out;
  for (const auto& [key, c] : p.terms()) {
    py::tuple shapes(key.arity());
    for (int k = 0; k < key.arity(); ++k)
      shapes[k] = py::tuple(py::cast(key.entries()[k].parts()));
    out[shapes] = py::int_(py::str(c.str()));
  }
  return out;
}

qc::Permutation perm(const std::vector<int>& image) {
  return qc::Permutation(image);
}

}  // namespace

PYBIND11_MODULE(qcquiver, m) {
  m.doc() = "Quiver coefficients, Schubert polynomials and Stanley "
            "symmetric functions in exact arithmetic";

  m.def("conjugate", [](const std::vector<int>& parts) {
    return parts_of(qc::Partition(parts).conjugate());
  });
  m.def("standard_tableau_count", [](const std::vector<int>& parts) {
    return py::int_(
        py::str(qc::standard_tableau_count(qc::Partition(parts)).str()));
  });
  m.def("lr_coefficient",
        [](const std::vector<int>& mu, const std::vector<int>& sigma,
           const std::vector<int>& tau) {
          return py::int_(py::str(qc::lr_coefficient(qc::Partition(mu),
                                                     qc::Partition(sigma),
                                                     qc::Partition(tau))
                                      .str()));
        });
  m.def("dominance_leq",
        [](const std::vector<int>& a, const std::vector<int>& b) {
          return qc::dominance_leq(qc::Partition(a), qc::Partition(b));
        });

  m.def("stanley_function", [](const std::vector<int>& w) {
    return schur_dict(qc::stanley_function(perm(w)));
  }, "Schur expansion of F_w as {shape tuple: coefficient}");
  m.def("reduced_words",
        [](const std::vector<int>& w) { return qc::reduced_words(perm(w)); });
  m.def("reduced_word_count", [](const std::vector<int>& w) {
    return py::int_(py::str(qc::reduced_word_count_via_stanley(perm(w)).str()));
  });
  m.def("permutation_length",
        [](const std::vector<int>& w) { return perm(w).length(); });
  m.def("expected_codim", [](const std::vector<int>& w) {
    return qc::rank_conditions_of(perm(w)).expected_codim();
  });
  m.def("quiver_coefficients_of_permutation", [](const std::vector<int>& w) {
    return tensor_dict(qc::compute_P(qc::rank_conditions_of(perm(w))));
  }, "P_r of the permutation's rank conditions as {shape tuples: coeff}");
  m.def("quiver_coefficients_from_ranks", [](const std::string& text) {
    return tensor_dict(qc::compute_P(qc::RankConditions::parse(text)));
  }, "P_r from the rank-conditions text format");
  m.def("schubert_polynomial",
        [](const std::vector<int>& w, int nvars, bool use_y) {
          return qc::assemble_schubert(perm(w), nvars)
              .restrict_vars(nvars, use_y ? nvars : 0)
              .str();
        },
        py::arg("w"), py::arg("nvars"), py::arg("use_y") = true);
  m.def("schubert_oracle_matches", [](const std::vector<int>& w, int nvars) {
    return qc::assemble_schubert(perm(w), nvars) ==
           qc::schubert_oracle(perm(w), nvars, true);
  });
  m.def("stable_limit_check", [](const std::vector<int>& w, int nvars) {
    return qc::stable_limit_check(perm(w), nvars);
  });
  m.def("factor_sequence_check", [](const std::vector<int>& w) {
    return qc::conjecture_check(qc::rank_conditions_of(perm(w))).all_match();
  });
  m.def("lambda_of", [](const std::vector<int>& w) {
    return parts_of(qc::lambda_of(perm(w)));
  });
  m.def("mu_of",
        [](const std::vector<int>& w) { return parts_of(qc::mu_of(perm(w))); });
}
