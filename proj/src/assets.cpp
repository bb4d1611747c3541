#include "mkp/assets.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace mkp {

namespace detail {
const std::map<std::string, std::string>& embedded_assets();
}

std::vector<std::string> asset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::embedded_assets()) names.push_back(name);
  names.push_back("fig1-pair");
  return names;
}

std::string asset_text(const std::string& name) {
  if (const char* dir = std::getenv("MKP_ASSET_DIR"); dir && *dir) {
    std::filesystem::path path = std::filesystem::path(dir) / (name + ".mkpd");
    if (std::ifstream in(path); in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }
  }
  const auto& table = detail::embedded_assets();
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown-asset", "no bundled drawing named '" + name + "'");
  return it->second;
}

TopologicalDrawing load_asset(const std::string& name) {
  if (name == "fig1-pair") throw Error("unknown-asset", "fig1-pair holds two drawings; use fig1-a or fig1-b");
  return parse_drawing(asset_text(name));
}

std::vector<TopologicalDrawing> load_fig1_pair() { return {load_asset("fig1-a"), load_asset("fig1-b")}; }

}  // namespace mkp
