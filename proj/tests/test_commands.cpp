#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cusco/commands.hpp"
#include "support/corpus.hpp"

using namespace cusco;
using namespace cusco::testing;

namespace {

SpecDoc load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

Report run(const std::string& command, const SpecDoc& doc, CommandOptions opt) {
  return run_command(command, doc, opt);
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("check-hpmin reports both verdicts on the step fixture") {
  SpecDoc doc = load_fixture("example2_1.sv");
  CommandOptions opt;
  opt.entity = "f";
  Report r = run("check-hpmin", doc, opt);
  CHECK(r.exit_code == 0);
  CHECK(r.text.find("hyperplane minimal: true") != std::string::npos);
  CHECK(r.text.find("quasicontinuous: false") != std::string::npos);
  CHECK(r.data["verdict"] == true);
  CHECK(r.data["quasicontinuous"] == false);

  Report q = run("check-qc", doc, opt);
  CHECK(q.exit_code == 1);
  CHECK(q.data["witnesses"].size() == 1);
  CHECK(q.data["witnesses"][0]["point"] == "0");
  CHECK(q.data["theorem"] == "QC def");
}

TEST_CASE("csc at the blow-up point") {
  SpecDoc doc = load_fixture("example2_2.sv");
  CommandOptions opt;
  opt.entity = "f";
  opt.at = Rat(0);
  Report r = run("csc", doc, opt);
  CHECK(r.exit_code == 0);
  CHECK(r.text == "[0, +inf)\n");
  opt.at = Rat(1);
  CHECK(run("csc", doc, opt).text == "{1}\n");
  opt.at.reset();
  CHECK(run("csc", doc, opt).exit_code == 2);
}

TEST_CASE("sampling a constant map on the quarter grid") {
  SpecDoc doc = load_fixture("const_map.sv");
  CommandOptions opt;
  opt.entity = "F";
  opt.step = Rat(1, 4);
  Report r = run("sample", doc, opt);
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.text) == 5);
  std::istringstream rows(r.text);
  std::string row;
  while (std::getline(rows, row)) {
    CHECK(row.substr(row.find(',')) == ",0,1");
  }
}

TEST_CASE("sampling a function emits x,y rows and skips undefined points") {
  SpecDoc doc;
  doc.functions.emplace_back("f", step_qc().restrict({Rat(0)}));
  CommandOptions opt;
  opt.entity = "f";
  opt.step = Rat(1, 2);
  Report r = run("sample", doc, opt);
  CHECK(r.exit_code == 0);
  // grid -1, -1/2, 0, 1/2, 1 with the undefined point 0 skipped
  CHECK(r.text == "-1,0\n-1/2,0\n1/2,1\n1,1\n");
}

TEST_CASE("sampling keeps lo <= hi with equality off breakpoints") {
  Corpus corpus(11);
  SpecDoc doc;
  doc.maps.emplace_back("M", corpus.random_minimal_cusco());
  CommandOptions opt;
  opt.entity = "M";
  opt.step = Rat(1, 8);
  Report r = run("sample", doc, opt);
  CHECK(r.exit_code == 0);
  const MultiMap& m = doc.maps[0].second;
  std::istringstream rows(r.text);
  std::string row;
  while (std::getline(rows, row)) {
    size_t c1 = row.find(','), c2 = row.find(',', c1 + 1);
    Rat x = Rat::parse(row.substr(0, c1));
    Rat lo = Rat::parse(row.substr(c1 + 1, c2 - c1 - 1));
    Rat hi = Rat::parse(row.substr(c2 + 1));
    CHECK(lo <= hi);
    if (!m.breakpoint_index(x)) CHECK(lo == hi);
  }
}

TEST_CASE("constructions serialize back into parseable maps") {
  SpecDoc doc;
  doc.functions.emplace_back("s", step_qc());
  CommandOptions opt;
  opt.entity = "s";
  Report r = run("construct-min-cusco", doc, opt);
  CHECK(r.exit_code == 0);
  SpecDoc out = parse_spec(r.text);
  REQUIRE(out.maps.size() == 1);
  CHECK(out.maps[0].second == minimal_cusco_from(step_qc()));
  CHECK(r.data["theorem"] == "Thm 2.3 (2)");

  // densely defined input takes the densely defined clause
  doc.functions.emplace_back("d", step_qc().restrict({Rat(0)}));
  opt.entity = "d";
  Report rd = run("construct-min-cusco", doc, opt);
  CHECK(rd.exit_code == 0);
  CHECK(rd.data["theorem"] == "Thm 2.5 (2)");

  // a non-subcontinuous selection is rejected with exit code 1
  SpecDoc bad = load_fixture("example2_2.sv");
  opt.entity = "f";
  Report rb = run("construct-min-cusco", bad, opt);
  CHECK(rb.exit_code == 1);
  CHECK(rb.text.find("rejected") != std::string::npos);
  CHECK(rb.text.find("subcontinuous") != std::string::npos);
}

TEST_CASE("extraction commands") {
  SpecDoc doc = load_fixture("sign_map.sv");
  CommandOptions opt;
  opt.entity = "F";
  Report r = run("extract-min-usco", doc, opt);
  CHECK(r.exit_code == 0);
  SpecDoc out = parse_spec(r.text);
  CHECK(out.maps[0].second.value_at(Rat(0)) ==
        std::vector<IntervalValue>{IntervalValue{Rat(-1), Rat(-1)},
                                   IntervalValue{Rat(1), Rat(1)}});

  SpecDoc cdoc = load_fixture("const_map.sv");
  Report rl = run("within-min-cusco", cdoc, opt);
  CHECK(rl.exit_code == 0);
  CHECK(parse_spec(rl.text).maps[0].second.value_at(Rat(1, 2)) ==
        std::vector<IntervalValue>{IntervalValue{Rat(0), Rat(0)}});
  opt.variant = EnvelopeVariant::Sup;
  Report rh = run("within-min-cusco", cdoc, opt);
  CHECK(parse_spec(rh.text).maps[0].second.value_at(Rat(1, 2)) ==
        std::vector<IntervalValue>{IntervalValue{Rat(1), Rat(1)}});

  // extract-min-usco requires a minimal cusco map
  CHECK(run("extract-min-usco", cdoc, opt).exit_code == 1);
}

TEST_CASE("subdiff command") {
  SpecDoc doc = load_fixture("abs.sv");
  CommandOptions opt;
  opt.entity = "g";
  Report r = run("subdiff", doc, opt);
  CHECK(r.exit_code == 0);
  CHECK(parse_spec(r.text.substr(0, r.text.find("non-differentiability"))).maps[0].second.value_at(Rat(0)) ==
        std::vector<IntervalValue>{IntervalValue{Rat(-1), Rat(1)}});
  CHECK(r.text.find("non-differentiability points: {0}") != std::string::npos);
}

TEST_CASE("oracle-agree command") {
  SpecDoc doc = load_fixture("example2_1.sv");
  CommandOptions opt;
  opt.entity = "f";
  opt.depth = 10;
  Report r = run("oracle-agree", doc, opt);
  CHECK(r.exit_code == 0);
  CHECK(r.data["agree"] == true);

  SpecDoc cdoc = load_fixture("const_map.sv");
  opt.entity = "F";
  CHECK(run("oracle-agree", cdoc, opt).exit_code == 0);
}

TEST_CASE("input errors exit with code 2") {
  SpecDoc doc = load_fixture("example2_1.sv");
  CommandOptions opt;
  opt.entity = "nope";
  CHECK(run("check-qc", doc, opt).exit_code == 2);
  opt.entity = "f";
  CHECK(run("check-usco", doc, opt).exit_code == 2);  // f is not a map
  CHECK(run("frobnicate", doc, opt).exit_code == 2);
  opt.step = Rat(0);
  CHECK(run("sample", doc, opt).exit_code == 2);
}

TEST_CASE("verdict commands never exit 0 on a false verdict") {
  Corpus corpus(12);
  for (int trial = 0; trial < 40; ++trial) {
    SpecDoc doc;
    Corpus::FnOptions fopt;
    fopt.undefined_percent = 15;
    doc.functions.emplace_back("f", corpus.random_pwfun(fopt));
    Corpus::MapOptions mopt;
    mopt.multiband = corpus.chance(30);
    doc.maps.emplace_back("m", corpus.random_usco(mopt));

    CommandOptions opt;
    opt.entity = "f";
    const PWFun& f = doc.functions[0].second;
    CHECK((run("check-qc", doc, opt).exit_code == 0) == is_quasicontinuous(f).holds);
    CHECK((run("check-subcont", doc, opt).exit_code == 0) == is_subcontinuous(f).holds);
    CHECK((run("check-hpmin", doc, opt).exit_code == 0) == is_hyperplane_minimal(f).holds);

    opt.entity = "m";
    const MultiMap& m = doc.maps[0].second;
    CHECK((run("check-usco", doc, opt).exit_code == 0) == is_usco(m).holds);
    CHECK((run("check-cusco", doc, opt).exit_code == 0) == is_cusco(m).holds);
    CHECK((run("check-min-usco", doc, opt).exit_code == 0) == is_minimal_usco(m).holds);
    CHECK((run("check-min-cusco", doc, opt).exit_code == 0) == is_minimal_cusco(m).holds);
  }
}
