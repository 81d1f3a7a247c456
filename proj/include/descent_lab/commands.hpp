#pragma once

// Document builders and verification suites behind the descent-lab CLI.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "descent_lab/characters.hpp"
#include "descent_lab/class_algebra.hpp"
#include "descent_lab/cosets.hpp"
#include "descent_lab/errors.hpp"
#include "descent_lab/linalg.hpp"
#include "descent_lab/solomon.hpp"
#include "descent_lab/table_io.hpp"
#include "descent_lab/verdict.hpp"
#include "descent_lab/weyl.hpp"

namespace descent_lab {

// ---------------------------------------------------------------------------
// Documents

/// Full basis multiplication table. With verify_cross both routes are computed
/// and must produce identical payloads.
inline TableDocument build_table(Rank rank, AlgebraKind algebra, Strategy strategy,
                                 bool verify_cross = false) {
  auto build = [&](Strategy s) {
    return algebra == AlgebraKind::class_algebra ? make_class_table(*ClassAlgebra::shared(rank, s))
                                                 : make_solomon_table(*cached_structure_table(rank, s));
  };
  if (!verify_cross) return build(strategy);
  TableDocument brute = build(Strategy::brute);
  TableDocument matrix = build(Strategy::matrix);
  if (!brute.same_payload(matrix)) {
    throw VerificationFailure("brute-force and matrix tables differ at rank " +
                              std::to_string(rank.n()));
  }
  matrix.metadata.strategy = "brute+matrix";
  return matrix;
}

inline MatrixDocument build_characters(Rank rank, Strategy strategy) {
  MatrixDocument doc;
  doc.kind = "characters";
  doc.rank = rank.n();
  doc.metadata.strategy = to_string(resolve(strategy, rank));
  const auto partitions = enumerate_partitions(rank);
  for (const auto& p : partitions) {
    doc.row_labels.push_back(to_string(p));
    doc.column_labels.push_back(to_string(p));
  }
  const RationalMatrix m = character_matrix(rank, strategy);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    doc.values.push_back(std::move(row));
  }
  return doc;
}

inline MatrixDocument build_marks(Rank rank, Strategy strategy) {
  MatrixDocument doc;
  doc.kind = "marks";
  doc.rank = rank.n();
  doc.metadata.strategy = to_string(resolve(strategy, rank));
  for (const auto& p : enumerate_partitions(rank)) {
    doc.row_labels.push_back(to_string(p));
    doc.column_labels.push_back(to_string(p));
  }
  const RationalMatrix m = marks_matrix(rank, strategy);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    doc.values.push_back(std::move(row));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Verification suites

enum class Suite { all, welldef, commute, semisimple, oracle, characters, burnside };

inline Suite parse_suite(std::string_view text) {
  if (text == "all") return Suite::all;
  if (text == "welldef") return Suite::welldef;
  if (text == "commute") return Suite::commute;
  if (text == "semisimple") return Suite::semisimple;
  if (text == "oracle") return Suite::oracle;
  if (text == "characters") return Suite::characters;
  if (text == "burnside") return Suite::burnside;
  throw Error("unknown suite '" + std::string(text) + "'");
}

inline std::string to_string(Suite s) {
  switch (s) {
    case Suite::all:
      return "all";
    case Suite::welldef:
      return "welldef";
    case Suite::commute:
      return "commute";
    case Suite::semisimple:
      return "semisimple";
    case Suite::oracle:
      return "oracle";
    case Suite::characters:
      return "characters";
    case Suite::burnside:
      return "burnside";
  }
  return "all";
}

struct CheckOutcome {
  std::string suite;
  std::string name;
  int rank = 0;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct CheckReport {
  int rank = 0;
  std::string suite;
  std::vector<CheckOutcome> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }

  const CheckOutcome* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }

  /// Timings are deliberately left out so reports are reproducible.
  std::string to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["rank"] = rank;
    j["suite"] = suite;
    j["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json item = nlohmann::ordered_json::object();
      item["suite"] = c.suite;
      item["check"] = c.name;
      item["rank"] = c.rank;
      item["outcome"] = c.passed ? "pass" : "fail";
      if (!c.detail.empty()) item["detail"] = c.detail;
      arr.push_back(std::move(item));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
  }
};

namespace checks {

inline Verdict identity_element(Rank rank, Strategy strategy) {
  const auto algebra = ClassAlgebra::shared(rank, strategy);
  const Partition one{{rank.points()}};
  for (const auto& p : algebra->basis()) {
    const ClassElement expected = ClassElement::basis(p, rank);
    if (!(algebra->product(one, p) == expected) || !(algebra->product(p, one) == expected)) {
      return Verdict::fail("[x" + to_string(one) + "] is not an identity for " + to_string(p));
    }
  }
  return Verdict::pass();
}

inline Verdict class_trace_form(Rank rank, Strategy strategy) {
  const Rational det = determinant(gram_matrix(rank, strategy).entries);
  if (det == 0) return Verdict::fail("class-algebra Gram determinant is 0");
  return Verdict::pass();
}

/// Degenerate for n >= 2 with every x_J - x_K (J ~ K) a null vector; nondegenerate at n = 1.
inline Verdict solomon_trace_form_degenerate(Rank rank, Strategy strategy) {
  const RationalMatrix gram = solomon_trace_form(rank, strategy);
  const Rational det = determinant(gram);
  if (rank.n() == 1) {
    return det != 0 ? Verdict::pass()
                    : Verdict::fail("Solomon trace form at rank 1 should be nondegenerate");
  }
  if (det != 0) return Verdict::fail("Solomon trace form is nondegenerate at rank " + std::to_string(rank.n()));
  for (const auto& v : radical_spanning_set(rank)) {
    const auto image = multiply(gram, v.coordinates());
    if (std::any_of(image.begin(), image.end(), [](const Rational& x) { return x != 0; })) {
      return Verdict::fail(to_string(v) + " is not a null vector of the Solomon trace form");
    }
  }
  return Verdict::pass();
}

/// ker(project) has dimension 2^n - p(n+1) and is spanned by the radical spanning set.
inline Verdict projection_kernel(Rank rank) {
  const std::size_t expected = (std::size_t{1} << rank.n()) - enumerate_partitions(rank).size();
  const std::size_t kernel = projection_kernel_dimension(rank);
  if (kernel != expected) {
    return Verdict::fail("kernel dimension " + std::to_string(kernel) + ", expected " +
                         std::to_string(expected));
  }
  const auto spanning = radical_spanning_set(rank);
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : spanning) {
    if (!project(v).is_zero()) return Verdict::fail(to_string(v) + " does not project to 0");
    rows.push_back(v.coordinates());
  }
  const std::size_t span = rows.empty() ? 0 : matrix_rank(from_rows(rows, std::size_t{rank.full_mask()} + 1));
  if (span != kernel) {
    return Verdict::fail("radical spanning set has rank " + std::to_string(span) + ", kernel has " +
                         std::to_string(kernel));
  }
  return Verdict::pass();
}

inline Verdict matrix_equals_brute(Rank rank) {
  const auto brute = cached_structure_table(rank, Strategy::brute);
  const auto matrix = cached_structure_table(rank, Strategy::matrix);
  for (const auto& j : enumerate_subsets(rank)) {
    for (const auto& k : enumerate_subsets(rank)) {
      if (brute->row(j, k) != matrix->row(j, k)) {
        for (const auto& l : enumerate_subsets(rank)) {
          if (brute->at(j, k, l) != matrix->at(j, k, l)) {
            return Verdict::fail("a(J=" + to_string(j) + ", K=" + to_string(k) + ", L=" + to_string(l) +
                                 "): brute " + std::to_string(brute->at(j, k, l)) + ", matrix " +
                                 std::to_string(matrix->at(j, k, l)));
          }
        }
      }
    }
  }
  return Verdict::pass();
}

inline Verdict margin_identity(Rank rank) {
  const auto table = cached_structure_table(rank, Strategy::matrix);
  for (const auto& j : enumerate_subsets(rank)) {
    for (const auto& k : enumerate_subsets(rank)) {
      const auto reps = double_coset_reps(j, k, rank, Strategy::brute).reps.size();
      if (table->double_coset_count(j, k) != reps) {
        return Verdict::fail("sum_L a(" + to_string(j) + "," + to_string(k) + ",L) = " +
                             std::to_string(table->double_coset_count(j, k)) + " but |X_JK| = " +
                             std::to_string(reps));
      }
      for (const auto& e : table->row(j, k)) {
        if (!e.subset.is_subset_of(k)) {
          return Verdict::fail("a(" + to_string(j) + "," + to_string(k) + "," + to_string(e.subset) +
                               ") nonzero with L not inside K");
        }
      }
    }
  }
  return Verdict::pass();
}

inline Verdict coset_paths_agree(Rank rank) {
  for (const auto& j : enumerate_subsets(rank)) {
    const auto brute = min_coset_reps(j, rank, Strategy::brute).reps;
    const auto direct = min_coset_reps(j, rank, Strategy::matrix).reps;
    if (brute != direct) return Verdict::fail("X_J differs between routes for J=" + to_string(j));
    if (brute.size() != count_min_reps(j, rank)) {
      return Verdict::fail("|X_J| = " + std::to_string(brute.size()) + " but multinomial = " +
                           std::to_string(count_min_reps(j, rank)) + " for J=" + to_string(j));
    }
    for (const auto& k : enumerate_subsets(rank)) {
      if (double_coset_reps(j, k, rank, Strategy::brute).reps !=
          double_coset_reps(j, k, rank, Strategy::matrix).reps) {
        return Verdict::fail("X_JK differs between routes for J=" + to_string(j) + ", K=" + to_string(k));
      }
    }
  }
  return Verdict::pass();
}

inline Verdict character_class_invariance(Rank rank, Strategy strategy) {
  for (const auto& j : enumerate_subsets(rank)) {
    const SimpleRootSet canon = canonical_representative(class_of(j, rank), rank);
    if (!(perm_character(j, rank, strategy) == perm_character(canon, rank, strategy))) {
      return Verdict::fail("chi" + to_string(j) + " != chi" + to_string(canon));
    }
  }
  return Verdict::pass();
}

inline Verdict character_paths_agree(Rank rank) {
  for (const auto& j : enumerate_subsets(rank)) {
    if (!(perm_character(j, rank, Strategy::brute) == perm_character(j, rank, Strategy::matrix))) {
      return Verdict::fail("fixed-coset count and cycle-filling count differ for chi" + to_string(j));
    }
  }
  return Verdict::pass();
}

inline Verdict mark_paths_agree(Rank rank) {
  for (const auto& j : enumerate_subsets(rank)) {
    for (const auto& p : enumerate_partitions(rank)) {
      const auto brute = mark(p, j, rank, Strategy::brute);
      const auto counted = mark(p, j, rank, Strategy::matrix);
      if (brute != counted) {
        return Verdict::fail("mark(" + to_string(p) + ", " + to_string(j) + "): brute " +
                             std::to_string(brute) + ", counted " + std::to_string(counted));
      }
    }
  }
  return Verdict::pass();
}

}  // namespace checks

/// Runs the named suite. Capacity errors propagate to the caller.
inline CheckReport run_checks(Rank rank, Suite suite, Strategy strategy = Strategy::automatic) {
  CheckReport report;
  report.rank = rank.n();
  report.suite = to_string(suite);
  const Strategy brute_or_matrix = rank.n() <= kBruteForceMaxRank ? Strategy::brute : Strategy::matrix;

  auto run = [&](Suite s, std::string name, auto&& check) {
    if (suite != Suite::all && suite != s) return;
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = check();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.checks.push_back({to_string(s), std::move(name), rank.n(), v.passed, v.counterexample,
                             elapsed.count()});
  };

  run(Suite::welldef, "representative_independence",
      [&] { return verify_well_defined(rank, brute_or_matrix); });
  run(Suite::commute, "commutative", [&] { return verify_commutative(rank, strategy); });
  run(Suite::commute, "identity", [&] { return checks::identity_element(rank, strategy); });
  run(Suite::semisimple, "class_trace_form_nondegenerate",
      [&] { return checks::class_trace_form(rank, strategy); });
  run(Suite::semisimple, "solomon_trace_form_degenerate",
      [&] { return checks::solomon_trace_form_degenerate(rank, strategy); });
  run(Suite::semisimple, "projection_kernel", [&] { return checks::projection_kernel(rank); });
  run(Suite::oracle, "matrix_equals_brute", [&] { return checks::matrix_equals_brute(rank); });
  run(Suite::oracle, "margin_identity", [&] { return checks::margin_identity(rank); });
  run(Suite::oracle, "coset_paths_agree", [&] { return checks::coset_paths_agree(rank); });
  run(Suite::characters, "character_iso", [&] { return verify_character_iso(rank, strategy); });
  run(Suite::characters, "character_class_invariance",
      [&] { return checks::character_class_invariance(rank, strategy); });
  run(Suite::characters, "character_paths_agree", [&] { return checks::character_paths_agree(rank); });
  run(Suite::burnside, "burnside_iso", [&] { return verify_burnside_iso(rank, strategy); });
  run(Suite::burnside, "mark_paths_agree", [&] { return checks::mark_paths_agree(rank); });
  return report;
}

}  // namespace descent_lab
