#include <stdexcept>

#include "hfcontact/io.hpp"

namespace hf {

namespace detail {
const std::vector<std::pair<std::string, std::string>>& embedded_fixtures();
}

std::vector<FixtureInfo> list_fixtures() {
  std::vector<FixtureInfo> out;
  for (const auto& [name, text] : detail::embedded_fixtures()) out.push_back({name, parse_document(text, name).description});
  return out;
}

const std::string& fixture_text(const std::string& name) {
  for (const auto& [n, text] : detail::embedded_fixtures())
    if (n == name) return text;
  throw std::out_of_range("unknown fixture \"" + name + "\"");
}

}  // namespace hf
