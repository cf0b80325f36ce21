#include "cgt/report.hpp"

#include <iomanip>

namespace cgt {

void ValidationReport::print(std::ostream& os, bool machine,
                             const std::string& module_tag) const {
  if (machine) {
    for (const auto& it : items) {
      std::string key = subject.empty() ? it.name : subject + "." + it.name;
      os << "check." << module_tag << "." << key << "="
         << (it.pass ? "pass" : "fail") << "\n";
      if (!it.pass && !it.witness.empty())
        os << "witness." << key << "=" << it.witness << "\n";
    }
    return;
  }
  size_t w = 8;
  for (const auto& it : items) w = std::max(w, it.name.size());
  if (!subject.empty()) os << "[" << module_tag << "] " << subject << "\n";
  for (const auto& it : items) {
    os << "  " << std::left << std::setw((int)w + 2) << it.name
       << (it.pass ? "pass" : "FAIL");
    if (!it.pass && !it.witness.empty()) os << "  witness " << it.witness;
    os << "\n";
  }
}

}  // namespace cgt
