#include "semichar/report.hpp"

#include <sstream>

namespace semichar {

nlohmann::ordered_json to_json(const RealizationReport& r) {
  nlohmann::ordered_json j;
  j["group_order"] = r.group_order;
  j["p"] = r.p;
  j["num_subgroups"] = r.num_subgroups;
  j["out_order"] = r.out_order;
  j["m"] = r.m.fits_ulong_p() ? nlohmann::ordered_json(r.m.get_ui())
                              : nlohmann::ordered_json(r.m.get_str());
  j["rank_r"] = r.rank_r;
  j["order_G"] = r.order_g.get_str();
  j["char_index_residue"] = r.char_index_residue;
  j["flags"] = {
      {"f_generated", r.flags.f_generated},
      {"left_stable", r.flags.left_stable},
      {"right_stable", r.flags.right_stable},
      {"contains_identity", r.flags.contains_identity},
      {"embeds", r.flags.embeds},
      {"realized", r.flags.realized},
  };
  j["morphisms"] = {{"accepted", r.accepted}, {"rejected", r.rejected}};
  return j;
}

std::string to_text(const RealizationReport& r) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "|S| = " << r.group_order << " (p = " << r.p << "), " << r.num_subgroups
     << " subgroups, |Out_F(S)| = " << r.out_order << "\n";
  os << "m = " << r.m.get_str() << ", |X| = " << r.explicit_points << ", rank r = " << r.rank_r
     << ", |G| = " << r.order_g.get_str() << "\n";
  os << "|X|/|S| mod p = " << r.char_index_residue << "\n";
  os << "F-generated: " << yes(r.flags.f_generated) << "\n";
  os << "left F-stable: " << yes(r.flags.left_stable) << "\n";
  os << "right F-stable: " << yes(r.flags.right_stable) << " (informational)\n";
  os << "contains S x_(S,id) S: " << yes(r.flags.contains_identity) << "\n";
  os << "S embeds in G: " << yes(r.flags.embeds) << "\n";
  os << "F = F_S(G): " << yes(r.flags.realized) << " (" << r.accepted << " morphisms accepted, "
     << r.rejected << " rejected)\n";
  os << "X =\n" << r.x_serialized;
  return os.str();
}

}  // namespace semichar
