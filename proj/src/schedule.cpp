#include "bootperc/schedule.hpp"

#include <cstdlib>

namespace bootperc {

namespace {

std::uint32_t parse_u32(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string(what) + ": expected unsigned integer, got '" + s +
                                "'");
  unsigned long v = std::strtoul(s.c_str(), nullptr, 10);
  if (v > 0xffffffffUL) throw std::invalid_argument(std::string(what) + ": value too large");
  return std::uint32_t(v);
}

}  // namespace

ThresholdSchedule parse_rule(const std::string& rule, std::uint32_t degree) {
  if (rule == "majority") return ThresholdSchedule::constant(majority_threshold(degree));
  if (rule.rfind("constant:", 0) == 0)
    return ThresholdSchedule::constant(parse_u32(rule.substr(9), "constant rule"));
  if (rule.rfind("bootk:", 0) == 0) {
    std::string rest = rule.substr(6);
    std::size_t c1 = rest.find(',');
    std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : rest.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("bootk rule: expected bootk:<r>,<k>,<t>");
    return ThresholdSchedule::relaxed(parse_u32(rest.substr(0, c1), "bootk r"),
                                      parse_u32(rest.substr(c1 + 1, c2 - c1 - 1), "bootk k"),
                                      parse_u32(rest.substr(c2 + 1), "bootk t"));
  }
  throw std::invalid_argument("rule: expected majority | constant:<r> | bootk:<r>,<k>,<t>");
}

}  // namespace bootperc
