#include "grundy/solution.hpp"

#include "grundy/error.hpp"
#include "json.hpp"

namespace grundy {

std::string solution_to_json(const GrundySolution& sol) {
  nlohmann::ordered_json j;
  j["grundy_number"] = sol.grundy_number;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& cls : sol.witness.classes) {
    auto arr = nlohmann::ordered_json::array();
    for (int v : cls) arr.push_back(v + 1);
    classes.push_back(std::move(arr));
  }
  j["classes"] = std::move(classes);
  auto ord = nlohmann::ordered_json::array();
  for (int v : sol.ordering) ord.push_back(v + 1);
  j["ordering"] = std::move(ord);
  j["algorithm"] = sol.algorithm;
  j["stats"] = {{"candidates_examined", sol.stats.candidates_examined},
                {"flow_checks", sol.stats.flow_checks},
                {"ilp_checks", sol.stats.ilp_checks},
                {"oracle_calls", sol.stats.oracle_calls},
                {"inconsistencies", sol.stats.inconsistencies},
                {"elapsed_ms", sol.stats.elapsed_ms}};
  return j.dump();
}

ParsedSolution solution_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("solution JSON: ") + e.what());
  }
  ParsedSolution out;
  try {
    out.grundy_number = j.at("grundy_number").get<int>();
    for (const auto& cls : j.at("classes")) {
      std::vector<int> members;
      for (const auto& v : cls) members.push_back(v.get<int>() - 1);
      out.classes.classes.push_back(std::move(members));
    }
    if (j.contains("ordering"))
      for (const auto& v : j["ordering"]) out.ordering.push_back(v.get<int>() - 1);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("solution JSON: ") + e.what());
  }
  return out;
}

}  // namespace grundy
