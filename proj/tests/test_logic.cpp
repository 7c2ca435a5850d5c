#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fsr/logic.hpp"
#include "support.hpp"

using namespace fsr;

namespace {

const TruthGrid kCrisp = TruthGrid::crisp();
const TruthGrid kThree({0.0, 0.5, 1.0});

Grade eval_text(const std::string& text, std::map<std::string, Grade> assignment,
                Implication impl = Implication::Goedel) {
  return eval_proposition(parse_proposition(text), assignment, impl);
}

}  // namespace

TEST_CASE("grid invariants") {
  CHECK_THROWS_AS(TruthGrid({0.5, 1.0}), Error);       // missing 0
  CHECK_THROWS_AS(TruthGrid({0.0, 0.5}), Error);       // missing 1
  CHECK_THROWS_AS(TruthGrid({0.0, 0.5, 0.5, 1.0}), Error);
  CHECK(TruthGrid({0.0, 0.25, 1.0}).size() == 3);
}

TEST_CASE("connective evaluation") {
  CHECK(eval_text("p | !p", {{"p", 0.5}}) == 0.5);
  CHECK(eval_text("p | q", {{"p", 0.0}, {"q", 1.0}}) == 1.0);
  CHECK(eval_text("p & q", {{"p", 0.3}, {"q", 0.8}}) == 0.3);

  CHECK(eval_text("p -> q", {{"p", 1.0}, {"q", 0.0}}, Implication::Material) == 0.0);
  CHECK(eval_text("p -> q", {{"p", 0.3}, {"q", 0.8}}, Implication::Material) == 0.8);
  CHECK(eval_text("p -> q", {{"p", 0.3}, {"q", 0.8}}, Implication::Goedel) == 1.0);
  CHECK(eval_text("p -> q", {{"p", 0.8}, {"q", 0.3}}, Implication::Goedel) == 0.3);

  // equivalence is the min of both implications
  CHECK(eval_text("p <-> q", {{"p", 0.8}, {"q", 0.3}}, Implication::Goedel) == 0.3);
  CHECK(eval_text("p <-> q", {{"p", 0.3}, {"q", 0.3}}, Implication::Goedel) == 1.0);

  CHECK(eval_text("0.25 | p", {{"p", 0.1}}) == 0.25);
  CHECK_THROWS_AS(eval_text("p & q", {{"p", 0.5}}), Error);
}

TEST_CASE("parser handles precedence and round-trips") {
  CHECK(to_string(parse_proposition("p & q | r")) == "((p & q) | r)");
  CHECK(to_string(parse_proposition("!p | q -> r <-> s")) == "(((!p | q) -> r) <-> s)");
  CHECK(to_string(parse_proposition("p -> q -> r")) == "(p -> (q -> r))");  // right assoc

  for (const char* text : {"(p & (p -> q)) -> q", "!(a | b) <-> (!a & !b)", "0.5 -> x"}) {
    PropositionPtr e = parse_proposition(text);
    CHECK(to_string(parse_proposition(to_string(e))) == to_string(e));
  }

  CHECK_THROWS_AS(parse_proposition("p &"), Error);
  CHECK_THROWS_AS(parse_proposition("(p"), Error);
  CHECK_THROWS_AS(parse_proposition("p q"), Error);
  CHECK_THROWS_AS(parse_proposition("1.5"), Error);  // constant outside [0, 1]
}

TEST_CASE("cayley tables reproduce the worked truth tables") {
  CayleyTable crisp_or = cayley_table(Proposition::Kind::Or, kCrisp);
  Eigen::MatrixXd expected_or(2, 2);
  expected_or << 0, 1, 1, 1;
  CHECK(crisp_or.cells == expected_or);

  CayleyTable fuzzy_or = cayley_table(Proposition::Kind::Or, kThree);
  Eigen::MatrixXd expected_fuzzy_or(3, 3);
  expected_fuzzy_or << 0, 0.5, 1,
                       0.5, 0.5, 1,
                       1, 1, 1;
  CHECK(fuzzy_or.cells == expected_fuzzy_or);
  CHECK(fuzzy_or.cells.row(1) == expected_fuzzy_or.row(1));  // middle row 0.5 0.5 1

  CayleyTable material = cayley_table(Proposition::Kind::Implies, kCrisp, Implication::Material);
  Eigen::MatrixXd expected_impl(2, 2);
  expected_impl << 1, 1, 0, 1;
  CHECK(material.cells == expected_impl);
}

TEST_CASE("fuzzy tables agree with the crisp tables in the corners") {
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> mid(0.01, 0.99);
  for (auto kind : {Proposition::Kind::And, Proposition::Kind::Or, Proposition::Kind::Implies,
                    Proposition::Kind::Equiv}) {
    for (auto impl : {Implication::Material, Implication::Goedel}) {
      CayleyTable crisp = cayley_table(kind, kCrisp, impl);
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values{0.0, mid(rng), mid(rng), 1.0};
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        CayleyTable fuzzy = cayley_table(kind, TruthGrid(values), impl);
        Eigen::Index last = fuzzy.cells.rows() - 1;
        CHECK(fuzzy.cells(0, 0) == crisp.cells(0, 0));
        CHECK(fuzzy.cells(0, last) == crisp.cells(0, 1));
        CHECK(fuzzy.cells(last, 0) == crisp.cells(1, 0));
        CHECK(fuzzy.cells(last, last) == crisp.cells(1, 1));
      }
    }
  }
}

TEST_CASE("classification over the three-valued grid") {
  Classification excluded_middle =
      classify_proposition(parse_proposition("p | !p"), kThree);
  CHECK(excluded_middle.verdict == Verdict::Satisfiable);
  REQUIRE(excluded_middle.counterexamples.size() == 1);
  CHECK(excluded_middle.counterexamples[0] == std::vector<Grade>{0.5});

  Classification modus_ponens =
      classify_proposition(parse_proposition("(p & (p -> q)) -> q"), kThree, Implication::Goedel);
  CHECK(modus_ponens.verdict == Verdict::Valid);
  CHECK(modus_ponens.counterexample_count == 0);

  Classification transitivity = classify_proposition(
      parse_proposition("((p -> q) & (q -> r)) -> (p -> r)"), kThree, Implication::Goedel);
  CHECK(transitivity.verdict == Verdict::Valid);

  CHECK(classify_proposition(Proposition::constant(1.0), kThree).verdict == Verdict::Valid);
  CHECK(classify_proposition(Proposition::constant(0.5), kThree).verdict ==
        Verdict::Unsatisfiable);

  Classification capped =
      classify_proposition(parse_proposition("p & q"), kThree, Implication::Goedel, 2);
  CHECK(capped.counterexamples.size() == 2);
  CHECK(capped.counterexample_count == 8);  // only (1, 1) evaluates to 1
}

TEST_CASE("classification bounds") {
  PropositionPtr wide = parse_proposition("a & b & c & d & e & f & g");
  CHECK_THROWS_AS(classify_proposition(wide, kThree), Error);

  std::vector<Grade> fine;
  for (int i = 0; i <= 11; ++i) fine.push_back(i / 11.0);
  CHECK_THROWS_AS(classify_proposition(parse_proposition("p"), TruthGrid(fine)), Error);
}

TEST_CASE("goedel validates modus ponens on every grid, material does not") {
  PropositionPtr mp = parse_proposition("(p & (p -> q)) -> q");
  for (const TruthGrid& grid : {kCrisp, kThree, TruthGrid({0, 0.2, 0.4, 0.6, 0.8, 1.0})}) {
    CHECK(classify_proposition(mp, grid, Implication::Goedel).verdict == Verdict::Valid);
  }
  CHECK(classify_proposition(mp, kThree, Implication::Material).verdict != Verdict::Valid);
}

TEST_CASE("max-min composition reproduces the worked inferences") {
  Eigen::MatrixXd implies(2, 2);
  implies << 1, 1, 0, 1;

  Eigen::VectorXd p_true(2), p_false(2), q_true(2);
  p_true << 0, 1;
  p_false << 1, 0;
  q_true << 1, 0;

  CHECK(compose_maxmin(p_true, implies, ComposeSide::Left) == (Eigen::VectorXd(2) << 0, 1).finished());
  CHECK(compose_maxmin(p_false, implies, ComposeSide::Left) ==
        (Eigen::VectorXd(2) << 1, 1).finished());
  // modus tollens: q false composed from the right leaves p false
  CHECK(compose_maxmin(q_true, implies, ComposeSide::Right) ==
        (Eigen::VectorXd(2) << 1, 0).finished());

  Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(3, 3);
  Eigen::VectorXd v(3);
  v << 0.2, 0.7, 0.4;
  CHECK(compose_maxmin(v, identity, ComposeSide::Left) == v);

  CHECK_THROWS_AS(compose_maxmin(v, implies, ComposeSide::Left), Error);
  Eigen::MatrixXd out_of_range = Eigen::MatrixXd::Constant(3, 3, 1.5);
  CHECK_THROWS_AS(compose_maxmin(v, out_of_range, ComposeSide::Left), Error);
}

TEST_CASE("boolean composition agrees with crisp relational image") {
  std::mt19937 rng(79);
  std::bernoulli_distribution bit(0.4);
  for (int trial = 0; trial < 300; ++trial) {
    Eigen::MatrixXd r(4, 5);
    Eigen::VectorXd p(4);
    for (Eigen::Index i = 0; i < 4; ++i) {
      p(i) = bit(rng) ? 1.0 : 0.0;
      for (Eigen::Index j = 0; j < 5; ++j) r(i, j) = bit(rng) ? 1.0 : 0.0;
    }
    Eigen::VectorXd q = compose_maxmin(p, r, ComposeSide::Left);
    for (Eigen::Index j = 0; j < 5; ++j) {
      bool image = false;
      for (Eigen::Index i = 0; i < 4; ++i) image = image || (p(i) == 1.0 && r(i, j) == 1.0);
      CHECK(q(j) == (image ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("composition is monotone in both arguments") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::MatrixXd r = fsrtest::random_grade_matrix(rng, 4, 4);
    Eigen::VectorXd p = fsrtest::random_grade_vector(rng, 4);
    Eigen::VectorXd base = compose_maxmin(p, r, ComposeSide::Left);

    Eigen::VectorXd p_up = p.cwiseMax(fsrtest::random_grade_vector(rng, 4));
    Eigen::MatrixXd r_up = r.cwiseMax(fsrtest::random_grade_matrix(rng, 4, 4));
    CHECK(((compose_maxmin(p_up, r, ComposeSide::Left) - base).array() >= 0).all());
    CHECK(((compose_maxmin(p, r_up, ComposeSide::Left) - base).array() >= 0).all());
  }
}
