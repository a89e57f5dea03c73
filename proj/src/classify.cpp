#include "strata/classify.hpp"

#include <sstream>
#include <stdexcept>

#include "strata/group_element.hpp"

namespace strata {

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::trivial: return "trivial";
    case GroupTag::integers: return "integers";
    case GroupTag::symmetric: return "symmetric";
    case GroupTag::pure_braid: return "pure_braid";
    case GroupTag::braid: return "braid";
    case GroupTag::pure_braid_mod_d: return "pure_braid_mod_D";
    case GroupTag::braid_mod_delta_sq: return "braid_mod_delta_sq";
    case GroupTag::central_ext_top: return "central_ext_top";
  }
  return "unknown";
}

std::string to_string(Flavor flavor) { return flavor == Flavor::ordered ? "ordered" : "unordered"; }

bool stratum_nonempty(int k, int i, int n) {
  if (k < 1 || n < 1 || i < 0 || i > n) return false;
  if (k == 1) return i == 0;
  return i >= 1 && i <= std::min(k - 1, n);
}

GroupDescriptor classify(int k, int i, int n, Flavor flavor) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!stratum_nonempty(k, i, n)) {
    std::ostringstream msg;
    msg << "empty stratum: " << k << " points cannot span an affine subspace of dimension " << i << " in C^"
        << n;
    throw std::domain_error(msg.str());
  }
  GroupDescriptor d;
  d.k = k;
  d.i = i;
  d.n = n;
  d.flavor = flavor;
  const bool ordered = flavor == Flavor::ordered;
  // k = 2, i = n = 1 sits on both exceptional loci; PB_2 = B_2 = ℤ there and
  // the line case takes precedence.
  if (i == 1 && n == 1) {
    d.tag = ordered ? GroupTag::pure_braid : GroupTag::braid;
  } else if (i == 1) {
    d.tag = ordered ? GroupTag::pure_braid_mod_d : GroupTag::braid_mod_delta_sq;
  } else if (i == n && n == k - 1) {
    d.tag = ordered ? GroupTag::integers : GroupTag::central_ext_top;
  } else {
    d.tag = ordered ? GroupTag::trivial : GroupTag::symmetric;
  }
  return d;
}

GroupDescriptor named_group(const std::string& name, int size) {
  if (size < 1) throw std::invalid_argument("group size must be positive");
  GroupDescriptor d;
  const auto line = [&](GroupTag tag, Flavor flavor, int n) {
    if (size < 2) throw std::invalid_argument(name + " needs k >= 2");
    d = GroupDescriptor{tag, size, 1, n, flavor};
  };
  if (name == "braid") {
    line(GroupTag::braid, Flavor::unordered, 1);
  } else if (name == "pure-braid") {
    line(GroupTag::pure_braid, Flavor::ordered, 1);
  } else if (name == "braid-mod-delta2") {
    line(GroupTag::braid_mod_delta_sq, Flavor::unordered, 2);
  } else if (name == "pure-braid-mod-d") {
    line(GroupTag::pure_braid_mod_d, Flavor::ordered, 2);
  } else if (name == "symmetric" || name == "trivial") {
    const Flavor flavor = name == "symmetric" ? Flavor::unordered : Flavor::ordered;
    const GroupTag tag = name == "symmetric" ? GroupTag::symmetric : GroupTag::trivial;
    d = size == 1 ? GroupDescriptor{tag, 1, 0, 1, flavor} : GroupDescriptor{tag, size, std::min(2, size - 1), 3, flavor};
  } else if (name == "integers") {
    d = GroupDescriptor{GroupTag::integers, size + 1, size, size, Flavor::ordered};
  } else if (name == "top") {
    d = GroupDescriptor{GroupTag::central_ext_top, size + 1, size, size, Flavor::unordered};
  } else {
    throw std::invalid_argument("unknown group '" + name + "'");
  }
  return d;
}

std::string GroupDescriptor::name() const {
  std::ostringstream out;
  switch (tag) {
    case GroupTag::trivial: out << "1"; break;
    case GroupTag::integers: out << "Z"; break;
    case GroupTag::symmetric: out << "S_" << k; break;
    case GroupTag::pure_braid: out << "PB_" << k; break;
    case GroupTag::braid: out << "B_" << k; break;
    case GroupTag::pure_braid_mod_d: out << "PB_" << k << " / ⟨D_" << k << "⟩"; break;
    case GroupTag::braid_mod_delta_sq: out << "B_" << k << " / ⟨Δ²⟩"; break;
    case GroupTag::central_ext_top:
      out << "B_" << k;
      if (k > 2) {
        out << " / ⟨";
        for (int s = 1; s <= k - 1; ++s) out << (s > 1 ? " = " : "") << "σ_" << s << "²";
        out << "⟩";
      }
      break;
  }
  return out.str();
}

std::string GroupDescriptor::statement() const {
  switch (tag) {
    case GroupTag::trivial: return "F_k^{i,n} is simply connected off i = 1 and i = n = k-1";
    case GroupTag::symmetric: return "π_1(C_k^{i,n}) = Σ_k off i = 1 and i = n = k-1";
    case GroupTag::pure_braid: return "π_1(F_k^{1,1}) = PB_k";
    case GroupTag::braid: return "π_1(C_k^{1,1}) = B_k";
    case GroupTag::pure_braid_mod_d: return "π_1(F_k^{1,n}) = PB_k/⟨D_k⟩ for n > 1";
    case GroupTag::braid_mod_delta_sq: return "π_1(C_k^{1,n}) = B_k/⟨Δ_k²⟩ for n > 1";
    case GroupTag::integers: return "π_1(F_{n+1}^{n,n}) = Z for n >= 1";
    case GroupTag::central_ext_top: return "π_1(C_{n+1}^{n,n}) = B_{n+1}/⟨σ_1² = ... = σ_n²⟩ for n >= 1";
  }
  return {};
}

Presentation GroupDescriptor::presentation() const {
  switch (tag) {
    case GroupTag::trivial: return Presentation{};
    case GroupTag::integers: return Presentation({"T"});
    case GroupTag::symmetric: {
      if (k < 2) return Presentation{};
      Presentation p = builtin_presentation(BuiltinKind::artin, k);
      for (int s = 0; s < k - 1; ++s) p.add_relator(Word{{s, 1}, {s, 1}});
      return p;
    }
    case GroupTag::pure_braid: return builtin_presentation(BuiltinKind::pure_braid, k);
    case GroupTag::braid: return builtin_presentation(BuiltinKind::artin, k);
    case GroupTag::pure_braid_mod_d: return builtin_presentation(BuiltinKind::pure_braid_mod_d, k);
    case GroupTag::braid_mod_delta_sq: return builtin_presentation(BuiltinKind::braid_mod_delta_sq, k);
    case GroupTag::central_ext_top: return star_top_presentation(k - 1);
  }
  return Presentation{};
}

}  // namespace strata
