#include "deltaknot/diagram.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace dk {

namespace {

// Ports of a crossing: 0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right.
// Strand A runs 0-3, strand B runs 1-2. Cap and cup nodes have two ports
// joined internally.
struct Node {
  bool is_crossing = false;
  bool over_is_a = false;
};

constexpr std::size_t kPorts = 4;

std::size_t internal_partner(const Node& node, std::size_t port) {
  if (node.is_crossing) {
    constexpr std::array<std::size_t, 4> partner{3, 2, 1, 0};
    return partner[port];
  }
  return port ^ 1u;
}

// Direction of travel through a crossing strand, x to the right, y upward.
std::array<int, 2> direction(std::size_t entry_port) {
  switch (entry_port) {
    case 0: return {1, -1};   // A downward
    case 3: return {-1, 1};   // A upward
    case 1: return {-1, -1};  // B downward
    default: return {1, 1};   // B upward
  }
}

}  // namespace

PlatDiagram::PlatDiagram(const ConwayWord& word) : word_(word) {
  std::vector<Node> nodes;
  std::vector<std::size_t> link;  // external connection, indexed by global port id

  auto add_node = [&](Node node) {
    nodes.push_back(node);
    link.resize(nodes.size() * kPorts, static_cast<std::size_t>(-1));
    return nodes.size() - 1;
  };
  auto port = [](std::size_t node, std::size_t k) { return node * kPorts + k; };
  auto connect = [&](std::size_t a, std::size_t b) {
    link[a] = b;
    link[b] = a;
  };

  const std::size_t cap_left = add_node({});
  const std::size_t cap_right = add_node({});
  std::array<std::size_t, 4> open{port(cap_left, 0), port(cap_left, 1), port(cap_right, 0),
                                  port(cap_right, 1)};

  std::vector<std::size_t> crossing_node;
  for (std::size_t band = 0; band < word.size(); ++band) {
    band_start_.push_back(crossing_node.size());
    const Entry a = word[band];
    const Entry count = a < 0 ? -a : a;
    const std::size_t left = band % 2 == 0 ? 1 : 0;
    // Right-handed half-twist puts strand B on top. Odd 1-based bands count
    // right-handed twists as positive, even ones left-handed.
    const bool right_handed = (band % 2 == 0) == (a > 0);
    for (Entry k = 0; k < count; ++k) {
      const std::size_t node = add_node({true, !right_handed});
      connect(open[left], port(node, 0));
      connect(open[left + 1], port(node, 1));
      open[left] = port(node, 2);
      open[left + 1] = port(node, 3);
      crossing_node.push_back(node);
      band_of_.push_back(band);
    }
  }
  const std::size_t cup_a = add_node({});
  const std::size_t cup_b = add_node({});
  if (word.size() % 2 == 1) {
    connect(open[0], port(cup_a, 0));
    connect(open[1], port(cup_a, 1));
    connect(open[2], port(cup_b, 0));
    connect(open[3], port(cup_b, 1));
  } else {
    connect(open[1], port(cup_a, 0));
    connect(open[2], port(cup_a, 1));
    connect(open[0], port(cup_b, 0));
    connect(open[3], port(cup_b, 1));
  }

  std::vector<std::size_t> node_to_crossing(nodes.size(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < crossing_node.size(); ++c) node_to_crossing[crossing_node[c]] = c;

  const std::size_t n_cross = crossing_node.size();
  sign_.assign(n_cross, 0);
  over_comp_.assign(n_cross, 0);
  under_comp_.assign(n_cross, 0);
  std::vector<std::array<int, 2>> over_dir(n_cross), under_dir(n_cross);

  std::vector<bool> used(nodes.size() * kPorts, false);
  auto walk = [&](std::size_t start_port) {
    // start_port is the port through which we enter its node.
    const std::size_t comp = components_.size();
    components_.emplace_back();
    std::size_t entry = start_port;
    do {
      const std::size_t node = entry / kPorts;
      const std::size_t in = entry % kPorts;
      const std::size_t out = internal_partner(nodes[node], in);
      used[entry] = used[port(node, out)] = true;
      if (nodes[node].is_crossing) {
        const std::size_t c = node_to_crossing[node];
        const bool on_a = in == 0 || in == 3;
        const bool over = on_a == nodes[node].over_is_a;
        components_[comp].push_back({c, over});
        (over ? over_dir : under_dir)[c] = direction(in);
        (over ? over_comp_ : under_comp_)[c] = comp;
      }
      entry = link[port(node, out)];
    } while (entry != start_port);
  };

  // Base point: leave the left top cap at position 1, i.e. enter it at port 0.
  walk(port(cap_left, 0));
  for (std::size_t p = 0; p < used.size(); ++p) {
    if (!used[p] && link[p] != static_cast<std::size_t>(-1)) walk(p);
  }

  for (std::size_t c = 0; c < n_cross; ++c) {
    const auto& o = over_dir[c];
    const auto& u = under_dir[c];
    sign_[c] = (o[0] * u[1] - o[1] * u[0]) > 0 ? 1 : -1;
  }
}

std::size_t PlatDiagram::crossing_id(std::size_t band, std::size_t k) const {
  if (band >= word_.size()) throw std::out_of_range("band index out of range");
  const Entry a = word_[band];
  if (static_cast<Entry>(k) >= (a < 0 ? -a : a)) throw std::out_of_range("crossing index out of range");
  return band_start_[band] + k;
}

LinkDiagram smooth(const ConwayWord& knot_word, std::size_t band, std::size_t k) {
  return smooth(PlatDiagram(knot_word), band, k);
}

LinkDiagram smooth(const PlatDiagram& diagram, std::size_t band, std::size_t k) {
  const ConwayWord& knot_word = diagram.word();
  if (diagram.component_count() != 1) {
    throw std::invalid_argument("smooth: " + to_string(knot_word) + " is not a knot diagram");
  }
  const std::size_t target = diagram.crossing_id(band, k);
  const auto& visits = diagram.components().front();
  // The oriented smoothing splits the traversal at the two visits of the
  // crossing: the arc strictly between them becomes one component.
  int side = 0;
  LinkDiagram out;
  out.word = knot_word;
  out.smoothed_band = band;
  out.smoothed_position = k;
  out.component_count = 2;
  std::vector<std::array<int, 2>> sides(diagram.crossing_count(), {-1, -1});
  std::vector<int> count(diagram.crossing_count(), 0);
  for (const auto& v : visits) {
    if (v.crossing == target) {
      side ^= 1;
      continue;
    }
    sides[v.crossing][count[v.crossing]++] = side;
  }
  for (std::size_t c = 0; c < diagram.crossing_count(); ++c) {
    if (c == target) continue;
    if (sides[c][0] != sides[c][1]) out.inter_component_signs.push_back(diagram.sign(c));
  }
  return out;
}

LinkDiagram trace_link(const ConwayWord& word) {
  const PlatDiagram diagram(word);
  LinkDiagram out;
  out.word = word;
  out.component_count = diagram.component_count();
  for (std::size_t c = 0; c < diagram.crossing_count(); ++c) {
    if (diagram.over_component(c) != diagram.under_component(c)) {
      out.inter_component_signs.push_back(diagram.sign(c));
    }
  }
  return out;
}

Entry lk(const LinkDiagram& diagram) {
  if (diagram.component_count != 2) {
    throw std::invalid_argument("lk: diagram has " + std::to_string(diagram.component_count) +
                                " component(s), expected 2");
  }
  Entry total = 0;
  for (int s : diagram.inter_component_signs) total += s;
  if (total % 2 != 0) throw std::logic_error("lk: odd signed count of inter-component crossings");
  return total / 2;
}

}  // namespace dk
