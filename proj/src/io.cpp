#include "fforest/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "fforest/errors.hpp"

namespace fforest {

using nlohmann::json;

namespace {

void check_keys(const json& j, const char* what,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) {
    throw ParseError(std::string(what) + ": expected an object");
  }
  for (const char* key : required) {
    if (!j.contains(key)) {
      throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
    }
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) {
      throw ParseError(std::string(what) + ": unknown key \"" + key + "\"");
    }
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::map<std::string, Elem> name_index(const Semigroup& s) {
  std::map<std::string, Elem> idx;
  for (Elem x = 0; x < s.size(); ++x) idx.emplace(s.element_name(x), x);
  return idx;
}

Elem element_by_name(const std::map<std::string, Elem>& idx,
                     const json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + ": element name must be a string");
  }
  const auto it = idx.find(j.get<std::string>());
  if (it == idx.end()) {
    throw ParseError(std::string(what) + ": unknown element \"" +
                     j.get<std::string>() + "\"");
  }
  return it->second;
}

std::string escape_dot(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Semigroup semigroup_from_json(const json& j) {
  check_keys(j, "semigroup", {"name", "elements", "table"});
  if (!j["name"].is_string() || !j["elements"].is_array() ||
      !j["table"].is_array()) {
    throw ParseError("semigroup: name must be a string, elements and table arrays");
  }
  std::vector<std::string> elements;
  for (const json& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("semigroup: element names must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::vector<Elem>> table;
  for (const json& row : j["table"]) {
    if (!row.is_array()) throw ParseError("semigroup: table rows must be arrays");
    std::vector<Elem> r;
    for (const json& cell : row) {
      if (!cell.is_number_unsigned()) {
        throw ParseError("semigroup: table entries must be nonnegative integers");
      }
      r.push_back(cell.get<Elem>());
    }
    table.push_back(std::move(r));
  }
  try {
    return Semigroup(j["name"].get<std::string>(), std::move(elements), table);
  } catch (const Error& e) {
    throw ParseError(std::string("semigroup: ") + e.what());
  }
}

json semigroup_to_json(const Semigroup& s) {
  json table = json::array();
  for (Elem a = 0; a < s.size(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < s.size(); ++b) row.push_back(s.mul(a, b));
    table.push_back(std::move(row));
  }
  json names = json::array();
  for (const std::string& n : s.element_names()) names.push_back(n);
  return json{{"name", s.name()}, {"elements", std::move(names)},
              {"table", std::move(table)}};
}

Semigroup load_semigroup_file(const std::filesystem::path& path) {
  return semigroup_from_json(read_json_file(path));
}

Homomorphism homomorphism_from_json(const json& j,
                                    const std::filesystem::path& base_dir) {
  check_keys(j, "homomorphism", {"semigroup", "alphabet"});
  Semigroup s = [&] {
    const json& sj = j["semigroup"];
    if (sj.is_string()) {
      std::filesystem::path p = sj.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      return load_semigroup_file(p);
    }
    return semigroup_from_json(sj);
  }();
  const json& alpha = j["alphabet"];
  if (!alpha.is_object() || alpha.empty()) {
    throw ParseError("homomorphism: alphabet must be a nonempty object");
  }
  const auto idx = name_index(s);
  std::map<char, Elem> letters;
  for (const auto& [key, value] : alpha.items()) {
    if (key.size() != 1) {
      throw ParseError("homomorphism: letter \"" + key +
                       "\" must be a single character");
    }
    letters[key[0]] = element_by_name(idx, value, "homomorphism alphabet");
  }
  return Homomorphism(std::move(s), letters);
}

json homomorphism_to_json(const Homomorphism& phi) {
  json alpha = json::object();
  for (char c : phi.alphabet()) {
    alpha[std::string(1, c)] =
        phi.semigroup().element_name(phi.letter_image(c));
  }
  return json{{"semigroup", semigroup_to_json(phi.semigroup())},
              {"alphabet", std::move(alpha)}};
}

Homomorphism load_homomorphism_file(const std::filesystem::path& path) {
  return homomorphism_from_json(read_json_file(path),
                                path.parent_path());
}

json forest_to_json(const FactTree& tree, const Homomorphism& phi,
                    const GreenData& green) {
  const Semigroup& s = phi.semigroup();
  std::vector<json> built(tree.nodes.size());
  // Post-order with an explicit stack; parsed trees can be arbitrarily
  // deep, builder trees are shallow, neither recurses here.
  std::vector<std::pair<NodeId, std::size_t>> st{{tree.root, 0}};
  while (!st.empty()) {
    const NodeId id = st.back().first;
    const std::size_t cursor = st.back().second;
    const FactNode& n = tree.nodes[id];
    if (n.is_leaf()) {
      built[id] = json{{"letter", std::string(1, n.letter)},
                       {"image", s.element_name(n.image)}};
      st.pop_back();
      continue;
    }
    if (cursor < n.children.size()) {
      ++st.back().second;
      st.emplace_back(n.children[cursor], 0);
      continue;
    }
    json kids = json::array();
    for (NodeId c : n.children) kids.push_back(std::move(built[c]));
    built[id] = json{{"image", s.element_name(n.image)},
                     {"idempotent", s.is_idempotent(n.image)},
                     {"children", std::move(kids)}};
    st.pop_back();
  }
  json doc = std::move(built[tree.root]);
  doc["word"] = tree.word;
  doc["height"] = height(tree);
  doc["bound"] = 3 * static_cast<int>(green.j_upper_set_size(phi.image(tree.word)));
  return doc;
}

FactTree forest_from_json(const json& j, const Homomorphism& phi) {
  check_keys(j, "forest", {"word", "image"},
             {"letter", "idempotent", "children", "height", "bound",
              "tool_version", "seed"});
  if (!j["word"].is_string()) throw ParseError("forest: word must be a string");
  const bool root_is_leaf = j.contains("letter");
  if (root_is_leaf == j.contains("children")) {
    throw ParseError("forest: a node has either a letter or children");
  }

  const auto idx = name_index(phi.semigroup());
  FactTree t;
  t.word = j["word"].get<std::string>();
  t.root = 0;

  struct Item {
    const json* node;
    NodeId parent;  // UINT32_MAX for the root
  };
  std::vector<Item> stack{{&j, UINT32_MAX}};
  std::uint32_t next_leaf_pos = 0;
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    const json& nj = *item.node;
    const bool is_root = item.parent == UINT32_MAX;
    if (!is_root) {
      if (nj.contains("letter") == nj.contains("children")) {
        throw ParseError("forest: a node has either a letter or children");
      }
      if (nj.contains("letter")) {
        check_keys(nj, "forest leaf", {"letter", "image"});
      } else {
        check_keys(nj, "forest node", {"image", "idempotent", "children"});
      }
    }
    const NodeId id = static_cast<NodeId>(t.nodes.size());
    t.nodes.emplace_back();
    if (!is_root) t.nodes[item.parent].children.push_back(id);
    t.nodes[id].image = element_by_name(idx, nj["image"], "forest image");
    if (nj.contains("letter")) {
      const json& lj = nj["letter"];
      if (!lj.is_string() || lj.get<std::string>().size() != 1) {
        throw ParseError("forest: letter must be a single-character string");
      }
      t.nodes[id].letter = lj.get<std::string>()[0];
      t.nodes[id].begin = next_leaf_pos;
      t.nodes[id].end = ++next_leaf_pos;
    } else {
      const json& kids = nj["children"];
      if (!kids.is_array() || kids.empty()) {
        throw ParseError("forest: children must be a nonempty array");
      }
      if (!nj.contains("idempotent") || !nj["idempotent"].is_boolean()) {
        throw ParseError("forest: idempotent must be a boolean");
      }
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        stack.push_back({&*it, id});
      }
    }
  }
  // Parents were created before their children, so a reverse scan sees
  // children first; spans then roll up from the leaf positions.
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    FactNode& n = t.nodes[i];
    if (!n.is_leaf()) {
      n.begin = t.nodes[n.children.front()].begin;
      n.end = t.nodes[n.children.back()].end;
    }
  }
  return t;
}

json verify_report_to_json(const VerifyReport& rep) {
  json violations = json::array();
  for (const Violation& v : rep.violations) {
    violations.push_back(json{{"span", json::array({v.begin, v.end})},
                              {"rule", v.rule}});
  }
  return json{{"valid", rep.valid},
              {"yield_ok", rep.yield_ok},
              {"height", rep.height},
              {"bound", rep.bound},
              {"within_bound", rep.within_bound()},
              {"violations", std::move(violations)}};
}

json oracle_result_to_json(const OracleResult& res, const Homomorphism& phi,
                           const GreenData& green) {
  return json{{"min_height", res.min_height},
              {"witness", forest_to_json(res.witness, phi, green)}};
}

json eggbox_to_json(const Semigroup& s, const GreenData& green) {
  json j_classes = json::array();
  for (std::uint32_t j = 0; j < green.num_j_classes(); ++j) {
    std::vector<std::uint32_t> rs, ls;
    for (Elem x = 0; x < s.size(); ++x) {
      if (green.j_class(x) != j) continue;
      if (std::find(rs.begin(), rs.end(), green.r_class(x)) == rs.end()) {
        rs.push_back(green.r_class(x));
      }
      if (std::find(ls.begin(), ls.end(), green.l_class(x)) == ls.end()) {
        ls.push_back(green.l_class(x));
      }
    }
    std::sort(rs.begin(), rs.end());
    std::sort(ls.begin(), ls.end());
    json grid = json::array();
    for (std::uint32_t r : rs) {
      json row = json::array();
      for (std::uint32_t l : ls) {
        bool found = false;
        for (Elem x = 0; x < s.size(); ++x) {
          if (green.j_class(x) == j && green.r_class(x) == r &&
              green.l_class(x) == l) {
            row.push_back(green.is_group_h_class(green.h_class(x)));
            found = true;
            break;
          }
        }
        if (!found) {
          throw InternalInvariantError("empty cell in an eggbox");
        }
      }
      grid.push_back(std::move(row));
    }
    j_classes.push_back(json{{"r_classes", rs},
                             {"l_classes", ls},
                             {"h_size", green.j_class_h_size(j)},
                             {"group_h", std::move(grid)}});
  }
  return json{{"j_classes", std::move(j_classes)}};
}

std::string forest_to_dot(const FactTree& tree, const Semigroup& s) {
  std::ostringstream out;
  out << "digraph factorization_tree {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  // Preorder over reachable nodes only.
  std::vector<NodeId> stack{tree.root};
  std::vector<bool> seen(tree.nodes.size(), false);
  if (tree.root < tree.nodes.size()) seen[tree.root] = true;
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const FactNode& n = tree.nodes[id];
    if (n.is_leaf()) {
      out << "  n" << id << " [label=\"" << escape_dot(std::string(1, n.letter))
          << "\\n" << escape_dot(s.element_name(n.image)) << "\"];\n";
      continue;
    }
    out << "  n" << id << " [label=\"" << escape_dot(s.element_name(n.image))
        << "\"";
    if (n.children.size() >= 3) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
    for (NodeId c : n.children) {
      out << "  n" << id << " -> n" << c << ";\n";
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      if (*it < tree.nodes.size() && !seen[*it]) {
        seen[*it] = true;
        stack.push_back(*it);
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string j_order_to_dot(const Semigroup& s, const GreenData& green) {
  const std::size_t nj = green.num_j_classes();
  // Strict order on J-classes via representatives.
  std::vector<Elem> rep(nj, 0);
  for (Elem x = static_cast<Elem>(s.size()); x-- > 0;) {
    rep[green.j_class(x)] = x;
  }
  auto below = [&](std::uint32_t a, std::uint32_t b) {
    return a != b && green.leq_j(rep[a], rep[b]);
  };

  std::ostringstream out;
  out << "digraph j_order {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::uint32_t j = 0; j < nj; ++j) {
    out << "  j" << j << " [label=\"J" << j << ": {";
    bool first = true;
    for (Elem x = 0; x < s.size(); ++x) {
      if (green.j_class(x) != j) continue;
      if (!first) out << ", ";
      out << escape_dot(s.element_name(x));
      first = false;
    }
    out << "}\"];\n";
  }
  for (std::uint32_t upper = 0; upper < nj; ++upper) {
    for (std::uint32_t lower = 0; lower < nj; ++lower) {
      if (!below(lower, upper)) continue;
      bool covering = true;
      for (std::uint32_t mid = 0; mid < nj && covering; ++mid) {
        covering = !(below(lower, mid) && below(mid, upper));
      }
      if (covering) out << "  j" << upper << " -> j" << lower << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fforest
