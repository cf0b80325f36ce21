#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgt/bundles.hpp"
#include "cgt/group.hpp"
#include "cgt/tcm.hpp"
#include "cgt/xmod.hpp"

namespace cgt {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& file, int line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// All named objects parsed from one or more input files, in input order.
struct InputBundle {
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, CrossedModule> xmods;
  std::map<std::string, TwoCrossedModule> tcms;
  std::map<std::string, FiniteCover> covers;
  std::map<std::string, Cocycle> cocycles;
  std::vector<std::string> group_order, xmod_order, tcm_order, cover_order,
      cocycle_order;
};

void parse_text(InputBundle& into, const std::string& text,
                const std::string& filename = "<input>");
void parse_file(InputBundle& into, const std::string& path);

std::string write_group(const FiniteGroup& g, const std::string& name);
std::string write_xmod(const CrossedModule& x, const std::string& name,
                       const std::string& h_name, const std::string& g_name);
std::string write_tcm(const TwoCrossedModule& t, const std::string& name,
                      const std::string& l_name, const std::string& m_name,
                      const std::string& n_name);
std::string write_cover(const FiniteCover& c, const std::string& name);
std::string write_cocycle(const Cocycle& c, const std::string& name,
                          const std::string& cover_name,
                          const std::string& group_name);

}  // namespace cgt
