#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <linkforge/families.hpp>
#include <linkforge/io.hpp>
#include <linkforge/optimize.hpp>

using namespace linkforge;

TEST(Io, RoundTripIsExact) {
  const Link l = make_family("link633").build(make_family("link633").initial(), 97);
  std::stringstream ss;
  write_link(ss, l);
  const Link back = read_link(ss);
  ASSERT_EQ(back.size(), l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t k = 0; k < l[i].size(); ++k) EXPECT_LE(distance(back[i][k], l[i][k]), 1e-12);
}

TEST(Io, LabelsSurvive) {
  const Link l({make_circle(1.0, Frame{}, 8), make_circle(1.0, Frame{{5, 0, 0}}, 8)}, {"a", "b"});
  const Link back = link_from_json(link_to_json(l));
  ASSERT_EQ(back.labels().size(), 2u);
  EXPECT_EQ(back.labels()[1], "b");
}

TEST(Io, MalformedInput) {
  std::stringstream bad("{not json");
  EXPECT_THROW(read_link(bad), ParseError);
  EXPECT_THROW(link_from_json(nlohmann::json::parse(R"({"curves": []})")), ParseError);
  EXPECT_THROW(link_from_json(nlohmann::json::parse(R"({"components": [{"vertices": [[0,0],[1,0],[1,1]]}]})")),
               ParseError);
  EXPECT_THROW(link_from_json(nlohmann::json::parse(R"({"components": [{"vertices": [[0,0,0],[1,0,0]]}]})")),
               InvalidArgument);
  EXPECT_THROW(read_link_file("/nonexistent/link.json"), ParseError);
}

TEST(Io, MinimizeResultJson) {
  MinimizeResult r;
  r.params_opt = {1.5, 0.25};
  r.param_names = {"a", "b"};
  r.energy_opt = 12.0;
  r.energy_doubled = 12.5;
  r.n_evals = 40;
  const nlohmann::json j = r;
  EXPECT_DOUBLE_EQ(j["params"]["b"].get<double>(), 0.25);
  EXPECT_DOUBLE_EQ(j["doubled_change"].get<double>(), 0.5);
  EXPECT_FALSE(j.contains("history"));
}
