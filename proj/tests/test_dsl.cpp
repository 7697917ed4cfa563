#include <gtest/gtest.h>

#include <random>

#include "qord/dsl.hpp"

using namespace qord;

namespace {

SourcePos error_pos(const std::string& text, std::string* message = nullptr) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    if (message) *message = e.what();
    return e.pos;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return {};
}

const ReportEntry* entry(const Report& r, const std::string& name) {
  for (const auto& e : r.checks)
    if (e.name == name) return &e;
  return nullptr;
}

const char* kExp1 = R"(
let R = poly(Q, X)
let u = padic(3) on Q
let v = gauss(u, gamma=1) on R
let w = gauss(u, gamma=0) on R
let q = from_val(w)
check compat(v, q) samples(count=200, include=["3", "X^2"])
)";

}  // namespace

TEST(DslParse, SmallestProgram) {
  SessionAst ast = parse_session("let v = padic(2) on Q");
  ASSERT_EQ(ast.statements.size(), 1u);
  const Stmt& s = ast.statements[0];
  EXPECT_EQ(s.kind, Stmt::Kind::let);
  EXPECT_EQ(s.name, "v");
  EXPECT_EQ(s.value.text, "padic");
  ASSERT_TRUE(s.on.has_value());
  EXPECT_EQ(s.on->text, "Q");
}

TEST(DslParse, GaussExtensionNode) {
  SessionAst ast = parse_session("let v = padic(2) on Q\nlet w = gauss(v, gamma=0) on poly(Q, X)");
  ASSERT_EQ(ast.statements.size(), 2u);
  const Expr& g = ast.statements[1].value;
  EXPECT_EQ(g.kind, Expr::Kind::call);
  EXPECT_EQ(g.text, "gauss");
  ASSERT_EQ(g.args.size(), 2u);
  EXPECT_EQ(g.args[1].key, "gamma");
  EXPECT_EQ(ast.statements[1].on->text, "poly");
}

TEST(DslParse, CheckDirective) {
  SessionAst ast = parse_session(
      "let v = padic(2) on Q\nlet qo = from_val(v)\ncheck compat(v, qo) samples(count=500, seed=7)");
  const Stmt& c = ast.statements[2];
  EXPECT_EQ(c.kind, Stmt::Kind::check);
  EXPECT_EQ(c.name, "compat");
  ASSERT_EQ(c.samples.size(), 2u);
  EXPECT_EQ(c.samples[0].key, "count");
  EXPECT_EQ(c.samples[1].value.text, "7");
}

TEST(DslParse, VariableListsAndComments) {
  SessionAst ast = parse_session("# ring\nlet R = poly(Z, X Y)  # two variables\nlet S = poly(Z, X, Y)\nshow R");
  EXPECT_EQ(ast.statements[0].value.args[1].value.kind, Expr::Kind::words);
  EXPECT_EQ(ast.statements[2].kind, Stmt::Kind::show);
}

TEST(DslParse, ErrorsCarryPositions) {
  std::string msg;
  SourcePos p = error_pos("let v = padic(2) on Q\nlet w = pdic(3) on Q", &msg);
  EXPECT_EQ(p.line, 2);
  EXPECT_EQ(p.column, 9);
  EXPECT_NE(msg.find("unknown constructor 'pdic'"), std::string::npos);

  p = error_pos("let v = padic(2, 3) on Q", &msg);
  EXPECT_EQ(p.column, 9);
  EXPECT_NE(msg.find("takes 1 argument, got 2"), std::string::npos);

  error_pos("let v = padic(2) on Q\ncheck compat(v, q) samples()", &msg);
  EXPECT_NE(msg.find("unbound name 'q'"), std::string::npos);

  error_pos("let v = padic(2)", &msg);
  EXPECT_NE(msg.find("needs an 'on' ring"), std::string::npos);

  error_pos("let v = padic(2) on Q\ncheck compat(v, v) samples()", &msg);
  EXPECT_NE(msg.find("must be quasi-order, got valuation"), std::string::npos);

  error_pos("let v = padic(2) on Q\ncheck val_axioms(v)", &msg);
  EXPECT_NE(msg.find("expected 'samples'"), std::string::npos);

  error_pos("let v = padic(2) on Q\ncheck frobnicate(v) samples()", &msg);
  EXPECT_NE(msg.find("unknown check"), std::string::npos);

  p = error_pos("let v = padic(2) on Q $", &msg);
  EXPECT_EQ(p.column, 23);
  EXPECT_NE(msg.find("unexpected character"), std::string::npos);

  error_pos("check value(v, \"X) samples()", &msg);
  EXPECT_NE(msg.find("unterminated string"), std::string::npos);

  error_pos("let v = padic(2) on Q\nlet v = padic(3) on Q", &msg);
  EXPECT_NE(msg.find("already bound"), std::string::npos);

  error_pos("let q = from_val(padic(2) on Q)", &msg);
  error_pos("let v = padic(2) on Q\ncheck val_axioms(v) samples(colour=3)", &msg);
  EXPECT_NE(msg.find("unknown key 'colour'"), std::string::npos);
  error_pos("let v = padic(2) on padic(3) on Q", &msg);
  error_pos("let Z = poly(Z, X)", &msg);
  EXPECT_NE(msg.find("reserved"), std::string::npos);
  error_pos("let R = frac(Z) on Q", &msg);
  EXPECT_NE(msg.find("does not take an 'on' ring"), std::string::npos);
}

TEST(DslParse, TotalOnArbitraryBytes) {
  std::mt19937_64 rng(42);
  const std::vector<std::string> vocab = {"let", "check", "show", "on", "samples", "(", ")", ",", "=", "[", "]",
                                          "-", "\"X\"", "v", "Q", "Z", "padic", "poly", "2", "gauss", "\n", "#"};
  for (int i = 0; i < 3000; ++i) {
    std::string text;
    const std::size_t n = rng() % 40;
    for (std::size_t k = 0; k < n; ++k) {
      if (i % 2) text += static_cast<char>(rng() % 256);
      else text += vocab[rng() % vocab.size()] + " ";
    }
    try {
      parse_session(text);
    } catch (const ParseError& e) {
      EXPECT_GE(e.pos.line, 1);
      EXPECT_GE(e.pos.column, 1);
    }
  }
  EXPECT_THROW(parse_session(std::string(500, '[')), ParseError);
}

TEST(DslRun, EmptySession) {
  SessionResult r = run_session(parse_session(""));
  EXPECT_TRUE(r.report.checks.empty());
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(DslRun, IncompatibilityWitness) {
  SessionResult r = run_session(parse_session(kExp1));
  const ReportEntry* e = entry(r.report, "compat(v, q): compatible");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->status, Status::fail);
  EXPECT_EQ(e->witness, (std::vector<std::string>{"3", "X^2"}));
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(DslRun, WitnessReplayReproducesFailure) {
  SessionResult first = run_session(parse_session(kExp1));
  const ReportEntry* e = entry(first.report, "compat(v, q): compatible");
  ASSERT_NE(e, nullptr);
  std::string replay = R"(
let R = poly(Q, X)
let u = padic(3) on Q
let v = gauss(u, gamma=1) on R
let w = gauss(u, gamma=0) on R
let q = from_val(w)
check compat(v, q) samples(count=0, include=[")" +
                       e->witness[0] + "\", \"" + e->witness[1] + "\"])";
  SessionResult again = run_session(parse_session(replay));
  ASSERT_EQ(again.report.checks.size(), 1u);
  EXPECT_EQ(again.report.checks[0].status, Status::fail);
  EXPECT_EQ(again.report.checks[0].witness, e->witness);
}

TEST(DslRun, RoundTripOnTwoAdicRationals) {
  SessionResult r = run_session(parse_session(R"(
let v = padic(2) on Q
let t = standard() on Q
let L = liftdata(v, eta=[1], residue=residue(from_val(v), v))
check roundtrip(L) samples(count=300)
)"));
  ASSERT_FALSE(r.report.checks.empty());
  for (const auto& e : r.report.checks) EXPECT_EQ(e.status, Status::pass) << e.name << " " << e.detail;
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(DslRun, DeterministicJson) {
  const std::string text = std::string(kExp1) + "check val_axioms(v) samples(count=100)\n";
  RunOptions o;
  o.seed = 5;
  const std::string a = render_json(run_session(parse_session(text), o).report);
  const std::string b = render_json(run_session(parse_session(text), o).report);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"seed\": 5"), std::string::npos);
}

TEST(DslRun, PreconditionInLetHalts) {
  SessionResult r = run_session(parse_session(R"(
let R = poly(Z, X)
let v = degree() on R
let q = at_origin() on R
let r = residue(q, v)
check val_axioms(v) samples()
)"));
  EXPECT_TRUE(r.halted);
  EXPECT_EQ(r.exit_code(), 3);
  ASSERT_EQ(r.report.checks.size(), 1u);
  EXPECT_EQ(r.report.checks[0].name, "let r");
  EXPECT_NE(r.report.checks[0].detail.find("not compatible"), std::string::npos);
}

TEST(DslRun, PreconditionInCheckIsInconclusive) {
  SessionResult r = run_session(parse_session(R"(
let R = poly(Z, X)
let v = degree() on R
let q = at_origin() on R
check theorem(q, v) samples(count=50)
)"));
  ASSERT_EQ(r.report.checks.size(), 1u);
  EXPECT_EQ(r.report.checks[0].status, Status::inconclusive);
  EXPECT_FALSE(r.halted);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(DslRun, RuntimeErrorInCheckFails) {
  SessionResult r = run_session(parse_session("let v = padic(2) on Q\ncheck value(v, \"X\", 0) samples()"));
  ASSERT_EQ(r.report.checks.size(), 1u);
  EXPECT_EQ(r.report.checks[0].status, Status::fail);
  EXPECT_EQ(r.report.checks[0].name, "value(v, \"X\", 0): error");
}

TEST(DslRun, ValuesAndShow) {
  SessionResult r = run_session(parse_session(R"(
let R = poly(Z, X Y)
let t = trivial() on Z
let v = gauss(t, gamma=[1, -1]) on R
show v
check value(v, "Y", -1) samples()
check value(v, "X*Y", 0) samples()
check value(v, "0", "inf") samples()
check value(v, "X", 0) samples()
)"));
  ASSERT_EQ(r.report.shown.size(), 1u);
  EXPECT_NE(r.report.shown[0].find("manis"), std::string::npos);
  ASSERT_EQ(r.report.checks.size(), 4u);
  EXPECT_EQ(r.report.checks[0].status, Status::pass);
  EXPECT_EQ(r.report.checks[1].status, Status::pass);
  EXPECT_EQ(r.report.checks[2].status, Status::pass);
  EXPECT_EQ(r.report.checks[3].status, Status::fail);
  EXPECT_EQ(r.report.checks[3].witness, std::vector<std::string>{"X"});
}

TEST(DslRun, SamplesClauseOverridesDefaults) {
  const std::string text = "let v = padic(2) on Q\ncheck val_axioms(v) samples(count=40, seed=9)";
  RunOptions o;
  o.seed = 1;
  o.samples = 10;
  SessionResult r = run_session(parse_session(text), o);
  ASSERT_FALSE(r.report.checks.empty());
  EXPECT_EQ(r.report.checks[0].seed, 9u);
  EXPECT_EQ(r.report.seed, 1u);
  SessionResult d = run_session(parse_session("let v = padic(2) on Q\ncheck val_axioms(v) samples()"), o);
  EXPECT_EQ(d.report.checks[0].seed, 1u);
}

TEST(DslRun, ConditionsRecordTableRows) {
  SessionResult r = run_session(parse_session(R"(
let v = padic(2) on Q
check conditions(from_val(v), v, label="self") samples(count=100)
)"));
  ASSERT_EQ(r.conditions.size(), 1u);
  EXPECT_EQ(r.conditions[0].label, "self");
  for (bool f : r.conditions[0].flags) EXPECT_TRUE(f);
  EXPECT_EQ(r.report.checks.size(), 5u);
}

TEST(DslRun, RankExpectation) {
  SessionResult r = run_session(parse_session(R"(
let v2 = padic(2) on Q
let v3 = padic(3) on Q
check rank(from_val(v2), v2, v3, expect=1) samples(count=100)
check rank(from_val(v2), v2, v3, expect=2) samples(count=100)
)"));
  const ReportEntry* ok = entry(r.report, "rank(from_val(v2), v2, v3, expect=1): rank");
  const ReportEntry* bad = entry(r.report, "rank(from_val(v2), v2, v3, expect=2): rank");
  ASSERT_NE(ok, nullptr);
  ASSERT_NE(bad, nullptr);
  EXPECT_EQ(ok->status, Status::pass);
  EXPECT_EQ(bad->status, Status::fail);
}
