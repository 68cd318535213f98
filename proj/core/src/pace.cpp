#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bnpg/parse_error.hpp"
#include "bnpg/tree_decomposition.hpp"
#include "text_util.hpp"

namespace bnpg {
using detail::number;
using detail::split;

TreeDecomposition read_pace(std::string_view text) {
  TreeDecomposition td;
  bool have_header = false;
  std::size_t declared_bags = 0;
  std::size_t declared_size = 0;
  std::vector<char> seen;
  std::vector<std::size_t> parent;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "s") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 5 || tokens[1] != "td") {
        throw ParseError(line_no, "malformed header, expected 's td <bags> <max_bag_size> <n>'");
      }
      declared_bags = number(tokens[2], line_no);
      declared_size = number(tokens[3], line_no);
      td.vertex_count = number(tokens[4], line_no);
      td.bags.assign(declared_bags, {});
      seen.assign(declared_bags, 0);
      parent.resize(declared_bags);
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "missing 's td' header");

    if (tokens[0] == "b") {
      if (tokens.size() < 2) throw ParseError(line_no, "bag line without an id");
      const std::size_t id = number(tokens[1], line_no);
      if (id < 1 || id > declared_bags) {
        throw ParseError(line_no, "bag id " + std::to_string(id) + " out of range [1, " +
                                      std::to_string(declared_bags) + "]");
      }
      if (seen[id - 1]) throw ParseError(line_no, "duplicate bag id " + std::to_string(id));
      seen[id - 1] = 1;
      auto& bag = td.bags[id - 1];
      for (std::size_t t = 2; t < tokens.size(); ++t) {
        const std::size_t v = number(tokens[t], line_no);
        if (v < 1 || v > td.vertex_count) {
          throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range [1, " +
                                        std::to_string(td.vertex_count) + "]");
        }
        bag.push_back(static_cast<Player>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(line_no, "bag " + std::to_string(id) + " repeats a vertex");
      }
      if (bag.size() > declared_size) {
        throw ParseError(line_no, "bag " + std::to_string(id) + " exceeds the declared size " +
                                      std::to_string(declared_size));
      }
      continue;
    }

    if (tokens.size() != 2) throw ParseError(line_no, "expected a tree edge '<bag> <bag>'");
    const std::size_t a = number(tokens[0], line_no);
    const std::size_t b = number(tokens[1], line_no);
    if (a < 1 || a > declared_bags || b < 1 || b > declared_bags || a == b) {
      throw ParseError(line_no, "tree edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") is invalid");
    }
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const std::size_t ra = root(a - 1);
    const std::size_t rb = root(b - 1);
    if (ra == rb) throw ParseError(line_no, "tree edges contain a cycle");
    parent[ra] = rb;
    td.tree_edges.emplace_back(a - 1, b - 1);
  }

  if (!have_header) throw ParseError(0, "missing 's td' header");
  for (std::size_t i = 0; i < declared_bags; ++i) {
    if (!seen[i]) throw ParseError(0, "missing bag " + std::to_string(i + 1));
  }
  if (declared_bags > 0 && td.tree_edges.size() != declared_bags - 1) {
    throw ParseError(0, "edge set is not a tree: " + std::to_string(td.tree_edges.size()) +
                            " edges for " + std::to_string(declared_bags) + " bags");
  }
  return td;
}

std::string write_pace(const TreeDecomposition& td) {
  std::size_t largest = 0;
  for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << largest << ' ' << td.vertex_count << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    std::vector<Player> bag = td.bags[i];
    std::sort(bag.begin(), bag.end());
    out << "b " << i + 1;
    for (Player v : bag) out << ' ' << v + 1;
    out << '\n';
  }
  auto edges = td.tree_edges;
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

}  // namespace bnpg
