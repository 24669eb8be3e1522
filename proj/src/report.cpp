#include "qcong/report.hpp"

namespace qcong {

CongruenceReport& CongruenceReport::set(std::string name, std::int64_t value) {
  for (auto& [key, v] : params)
    if (key == name) {
      v = value;
      return *this;
    }
  params.emplace_back(std::move(name), value);
  return *this;
}

std::optional<std::int64_t> CongruenceReport::param(std::string_view name) const {
  for (const auto& [key, v] : params)
    if (key == name) return v;
  return std::nullopt;
}

}  // namespace qcong
