#pragma once

#include <string>

#include "summax/step_function.hpp"

namespace summax {

// JSON form: {"initial": number, "jumps": [[t, v], ...]}.
std::string to_json(const StepFunction& f);
StepFunction step_function_from_json(const std::string& text);
StepFunction load_step_function(const std::string& path);
void save_step_function(const StepFunction& f, const std::string& path);

}  // namespace summax
