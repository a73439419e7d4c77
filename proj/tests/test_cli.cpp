#include <doctest.h>

#include <sstream>

#include "hadsec/config.hpp"
#include "hadsec/descriptor.hpp"
#include "hadsec/hadamard.hpp"
#include "hadsec/json_io.hpp"
#include "hadsec/secant.hpp"
#include "hadsec/tables.hpp"

using namespace hadsec;

namespace {

std::size_t error_position(std::string_view text) {
  try {
    parse_descriptor(text);
  } catch (const DescriptorError& e) {
    return e.position();
  }
  return std::string_view::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("descriptor parsing") {
    const auto v = parse_descriptor("veronese:d=4,n=2");
    CHECK(v.kind() == VarietyKind::veronese);
    CHECK(v.ambient_dim() == 14);
    CHECK(v.dim() == 2);
    CHECK(parse_descriptor("segre:n=1,1,1").ambient_dim() == 7);
    CHECK(parse_descriptor("sv:d=2,1;n=1,2").ambient_dim() == 3 * 3 - 1);
    CHECK(parse_descriptor("rnc:8").ambient_dim() == 8);
    const auto m = parse_descriptor("matrix:" FIXTURE_DIR "/rnc4.csv");
    CHECK(m.ambient_dim() == 4);
    CHECK(m.dim() == 1);
  }

  TEST_CASE("canonical descriptor strings round-trip") {
    for (const char* s : {"veronese:d=4,n=2", "segre:n=1,2,3", "sv:d=2,2;n=1,1", "rnc:8"}) {
      CHECK(parse_descriptor(s).to_string() == s);
      CHECK(parse_descriptor(parse_descriptor(s).to_string()).ambient_dim() == parse_descriptor(s).ambient_dim());
    }
  }

  TEST_CASE("descriptor errors carry a position") {
    CHECK(error_position("veronese") == 8);
    CHECK(error_position("foo:1") == 0);
    CHECK(error_position("veronese:d=x,n=2") == 11);
    CHECK(error_position("veronese:d=2,n=0") == 15);
    CHECK(error_position("sv:d=2,2;n=1") == 8);
    CHECK(error_position("segre:n=1;2") == 9);
    CHECK(error_position("rnc:2,3") == 4);
    CHECK(error_position("matrix:/no/such/file.csv") == 7);
    CHECK(error_position("matrix:" FIXTURE_DIR "/malformed.txt") == 7);
  }

  TEST_CASE("integer lists") {
    CHECK(parse_int_list("2,2,3") == std::vector<int>{2, 2, 3});
    CHECK_THROWS_AS(parse_int_list(""), DescriptorError);
    CHECK_THROWS_AS(parse_int_list("2,"), DescriptorError);
    CHECK_THROWS_AS(parse_int_list("2,-1"), DescriptorError);
  }

  TEST_CASE("run configuration validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.prime = 101;
    CHECK_THROWS_AS(cfg.validate(), FieldError);
    cfg.prime = (1ULL << 31) - 2;
    CHECK_THROWS_AS(cfg.validate(), FieldError);
    cfg.prime = (1ULL << 31) - 1;
    CHECK_NOTHROW(cfg.validate());
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), FieldError);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(to_string(OutputFormat::text) == "text");
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
  }

  TEST_CASE("json output is deterministic") {
    const RunConfig cfg;
    const auto x = VarietyDescriptor::veronese(4, 2);
    const auto a = to_json(secant_dimension(x, 5, cfg)).dump();
    const auto b = to_json(secant_dimension(x, 5, cfg)).dump();
    CHECK(a == b);
    const auto j = Json::parse(a);
    CHECK(j["schema"] == kJsonSchema);
    CHECK(j["kind"] == "secant_dimension");
    CHECK(j["computed_dim"] == 13);
    CHECK(j["status"] == kStatusDefective);

    const auto h1 = to_json(hadamard_dimension(x, HadamardSpec({2, 2}), cfg)).dump();
    CHECK(h1 == to_json(hadamard_dimension(x, HadamardSpec({2, 2}), cfg)).dump());
    CHECK(Json::parse(h1).begin().key() == "schema");
  }

  TEST_CASE("table csv") {
    const RunConfig cfg;
    const auto t = binary_table(cfg);
    CHECK(t.all_pass());
    std::ostringstream out;
    write_table_csv(out, t);
    const auto text = out.str();
    CHECK(text.rfind("descriptor,r,m,dim,expected,status\n", 0) == 0);
    CHECK(text.find("fail") == std::string::npos);
    CHECK(to_json(t)["row_count"] == t.rows.size());
  }
}
