#include "summax/serialization.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace summax {

std::string to_json(const StepFunction& f) {
  nlohmann::json j;
  j["initial"] = f.initial_value();
  auto jumps = nlohmann::json::array();
  for (const auto& jump : f.jumps()) {
    jumps.push_back({jump.time, jump.value});
  }
  j["jumps"] = std::move(jumps);
  return j.dump();
}

StepFunction step_function_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("initial") || !j.contains("jumps")) {
    throw std::invalid_argument("step function JSON needs 'initial' and 'jumps'");
  }
  std::vector<StepFunction::Jump> jumps;
  for (const auto& entry : j.at("jumps")) {
    jumps.push_back({entry.at(0).get<double>(), entry.at(1).get<double>()});
  }
  return StepFunction(j.at("initial").get<double>(), std::move(jumps));
}

StepFunction load_step_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return step_function_from_json(text);
}

void save_step_function(const StepFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(f) << "\n";
}

}  // namespace summax
