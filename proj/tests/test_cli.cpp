#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "weylharm/cli.hpp"
#include "weylharm/json_codec.hpp"
#include "weylharm/expr.hpp"

using namespace weylharm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = run_command(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Invariant) {
  EXPECT_EQ(run({"invariant", "z*dzb"}).out, "false\n");
  EXPECT_EQ(run({"invariant", "z*dzb"}).code, 0);
  EXPECT_EQ(run({"invariant", "z*zb*dz*dzb"}).out, "true\n");
}

TEST(Cli, Normalize) {
  const auto r = run({"normalize", "dz*z"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + z*dz\n");
}

TEST(Cli, Reduce) {
  const auto r = run({"reduce", "--m", "1", "dz*dzb"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x*d^2 + 2*d\n");
  const auto bad = run({"reduce", "--m", "0", "z*dzb"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("error:domain:", 0), 0u);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, Cellular) {
  const auto r = run({"cellular", "z*zb"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order 2"), std::string::npos);
  EXPECT_NE(r.out.find("w0 = 1/2 + 1/2*z*zb"), std::string::npos);
  EXPECT_NE(r.out.find("w1 = -1/2"), std::string::npos);
  EXPECT_EQ(run({"cellular", "0"}).code, 1);
}

TEST(Cli, CellularJson) {
  const auto r = run({"--json", "cellular", "z*zb"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("order"), 2);
  EXPECT_EQ(j.at("layers").size(), 2u);
  const auto c = cellular_from_json(j);
  EXPECT_EQ(c.reconstruct(), parse_poly("z*zb"));
  EXPECT_EQ(run({"cellular", "--json", "z*zb"}).out, r.out);
}

TEST(Cli, SyntaxAndUsageErrors) {
  const auto r = run({"order", "z^"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error:syntax:", 0), 0u);
  EXPECT_NE(r.err.find("offset 2"), std::string::npos);
  EXPECT_EQ(run({"order", "z^99"}).err.rfind("error:limit:", 0), 0u);
  EXPECT_EQ(run({"order", "z^99"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"order", "--nope", "z"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"kernel", "--max-deg", "1000", "dz"}).code, 2);
}

TEST(Cli, Stdin) {
  EXPECT_EQ(run({"order", "-"}, "z^2*zb^2\n").out, "3\n");
  EXPECT_EQ(run({"apply", "dz", "-"}, "z^2").out, "2*z\n");
}

TEST(Cli, EnvJson) {
  setenv("WEYLHARM_JSON", "1", 1);
  const auto r = run({"order", "z*zb"});
  unsetenv("WEYLHARM_JSON");
  EXPECT_EQ(r.code, 0);
  EXPECT_NO_THROW((void)nlohmann::json::parse(r.out));
  EXPECT_EQ(run({"--json", "order", "z*zb"}).out, r.out);
}

TEST(Cli, EveryCommandRuns) {
  const std::vector<std::vector<std::string>> cases = {
      {"normalize", "dz*z"},
      {"invariant", "z*dz"},
      {"factor", "z^2*zb^2*dz*dzb"},
      {"generators", "z^2*dz^2"},
      {"reduce", "--m", "-2", "z*dz"},
      {"apply", "z*dz", "z^3"},
      {"project", "--set", "-1,1", "--pick", "1", "z + zb"},
      {"kernel", "--max-deg", "2", "dz*dzb"},
      {"order", "z*zb"},
      {"almansi", "z*zb"},
      {"cellular", "z*zb"},
      {"gamma-expand", "--g1", "1", "--g2", "1", "--coeffs", "0:1"},
      {"gamma-coeffs", "--g1", "1", "--g2", "1", "1 + z*zb"},
      {"inner", "z", "z"},
      {"inner", "--l2", "z", "z"},
      {"obasis", "--m", "0", "--n", "1"},
  };
  for (const auto& args : cases) {
    const auto text = run(args);
    EXPECT_EQ(text.code, 0) << args[0] << ": " << text.err;
    EXPECT_FALSE(text.out.empty());
    std::vector<std::string> j = args;
    j.insert(j.begin(), "--json");
    const auto js = run(j);
    EXPECT_EQ(js.code, 0) << args[0];
    EXPECT_NO_THROW((void)nlohmann::json::parse(js.out)) << args[0];
    // Byte-for-byte determinism.
    EXPECT_EQ(run(args).out, text.out);
  }
}

TEST(Cli, SpecificOutputs) {
  EXPECT_EQ(run({"project", "--set", "-1,1", "--pick", "1", "z + zb"}).out, "z\n");
  EXPECT_EQ(run({"inner", "--l2", "z", "z"}).out, "1/2\n");
  EXPECT_EQ(run({"inner", "z", "z"}).out, "x\n");
  EXPECT_EQ(run({"obasis", "--m", "0", "--n", "1"}).out, "O0 = 1 + x\nO1 = 1 - x\n");
  EXPECT_EQ(run({"gamma-expand", "--g1", "1", "--g2", "1", "--coeffs", "0:1"}).out, "1 + z*zb\n");
  EXPECT_EQ(run({"gamma-coeffs", "--g1", "1", "--g2", "1", "1 + z*zb"}).out, "c[0] = 1\n");
  EXPECT_EQ(run({"almansi", "z*zb"}).out, "q0 = 1\nq1 = -1\n");
  EXPECT_EQ(run({"kernel", "--max-deg", "1", "dz*dzb"}).out, "dim 3\n1\nzb\nz\n");
  EXPECT_EQ(run({"project", "--set", "1,1", "--pick", "1", "z"}).code, 1);
  EXPECT_EQ(run({"gamma-coeffs", "--g1", "1", "--g2", "1", "z*zb"}).code, 1);
}

TEST(JsonCodec, RoundTrip) {
  const BiPoly p = parse_poly("3/2*z^2 + (1-2/3*i)*zb - 7");
  EXPECT_EQ(bipoly_from_json(to_json(p)), p);
  const WeylOp2 d = parse_op("(1 - z*zb)*dz*dzb + i*z*dz");
  EXPECT_EQ(weylop2_from_json(to_json(d)), d);
  const GaussRational c = GaussRational::parse("-5/7+2/3*i");
  EXPECT_EQ(scalar_from_json(to_json(c)), c);
  EXPECT_TRUE(to_json(c).is_string());
  const auto cd = cellular_decompose(parse_poly("z^2*zb + zb^3*z"));
  const auto back = cellular_from_json(to_json(cd));
  EXPECT_EQ(back.order, cd.order);
  EXPECT_EQ(back.coeffs, cd.coeffs);
  EXPECT_EQ(back.layers, cd.layers);
}
