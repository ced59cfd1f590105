#include "eulerfan/system.hpp"

namespace eulerfan {

namespace {

std::string region_name(int idx, int n_waves) {
  if (idx == 0) return "-";
  if (idx == n_waves + 1) return "+";
  return std::to_string(idx);
}

}  // namespace

std::string MarginId::str(int n_waves) const {
  switch (kind) {
    case Kinetic: return "kinetic[" + std::to_string(i) + "]";
    case StressDet: return "stress_det[" + std::to_string(i) + "]";
    case EntropyLeft: return "entropy[left]";
    case EntropyInterface: return "entropy[" + std::to_string(i) + "]";
    case EntropyRight: return "entropy[right]";
    case SpeedOrder: return "speed_order[" + std::to_string(i) + "]";
    case RhoPositive: return "rho_pos[" + region_name(i, n_waves) + "]";
    case DepsPositive: return "deps_pos[" + region_name(i, n_waves) + "]";
    case Convexity:
      return "convex[" + region_name(i, n_waves) + "," + region_name(j, n_waves) + "]";
  }
  return "?";
}

std::vector<std::string> MarginSchema::labels() const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(id.str(n_waves));
  return out;
}

MarginSchema margin_schema(int n_waves, bool include_plus) {
  MarginSchema sch;
  sch.n_waves = n_waves;
  sch.include_plus = include_plus;
  auto& ids = sch.ids;
  for (int i = 1; i <= n_waves; ++i) ids.push_back({MarginId::Kinetic, i});
  for (int i = 1; i <= n_waves; ++i) ids.push_back({MarginId::StressDet, i});
  ids.push_back({MarginId::EntropyLeft});
  for (int i = 1; i <= n_waves - 1; ++i) ids.push_back({MarginId::EntropyInterface, i});
  ids.push_back({MarginId::EntropyRight});
  for (int i = 1; i <= n_waves; ++i) ids.push_back({MarginId::SpeedOrder, i});
  for (int i = 0; i <= n_waves + 1; ++i) ids.push_back({MarginId::RhoPositive, i});
  for (int i = 0; i <= n_waves + 1; ++i) ids.push_back({MarginId::DepsPositive, i});
  const int last = include_plus ? n_waves + 1 : n_waves;
  for (int i = 0; i <= last; ++i) {
    int a = (i == n_waves + 1) ? n_waves + 1 : i;
    for (int j = 0; j <= last; ++j) {
      if (i == j) continue;
      int b = (j == n_waves + 1) ? n_waves + 1 : j;
      ids.push_back({MarginId::Convexity, a, b});
    }
  }
  return sch;
}

std::vector<std::string> equality_labels(int n_waves) {
  std::vector<std::string> out;
  const char* comp[3] = {"mass", "mom1", "mom2"};
  for (int k = 0; k <= n_waves; ++k) {
    std::string iface = (k == 0) ? "left" : (k == n_waves ? "right" : std::to_string(k));
    for (const char* c : comp) out.push_back(iface + ":" + c);
  }
  return out;
}

}  // namespace eulerfan
