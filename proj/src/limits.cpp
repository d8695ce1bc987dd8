#include "qlab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <mutex>
#include <string>

#include "qlab/error.hpp"

namespace qlab {

namespace {

std::size_t to_size(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(Errc::invalid_input, "bad limit value '" + std::string(s) + "'");
  return v;
}

Limits& storage() {
  static Limits l = [] {
    Limits base;
    if (const char* env = std::getenv("QLAB_LIMIT"); env && *env) return parse_limits(env, base);
    return base;
  }();
  return l;
}

std::mutex& guard() {
  static std::mutex m;
  return m;
}

}  // namespace

Limits parse_limits(std::string_view text, Limits base) {
  if (text.find('=') == std::string_view::npos) {
    std::size_t v = to_size(text);
    base.subset_quantification = v;
    base.closure_enumeration = v;
    base.powerset_base = v;
    return base;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(Errc::invalid_input, "bad limit item '" + std::string(item) + "'");
    auto key = item.substr(0, eq);
    auto v = to_size(item.substr(eq + 1));
    if (key == "subset") base.subset_quantification = v;
    else if (key == "closures") base.closure_enumeration = v;
    else if (key == "powerset") base.powerset_base = v;
    else if (key == "lin") base.lin_maps = v;
    else if (key == "moore") base.moore_materialize = v;
    else fail(Errc::invalid_input, "unknown limit key '" + std::string(key) + "'");
  }
  return base;
}

const Limits& limits() {
  std::lock_guard lock(guard());
  return storage();
}

void set_limits(const Limits& l) {
  std::lock_guard lock(guard());
  storage() = l;
}

}  // namespace qlab
