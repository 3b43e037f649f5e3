#include "tautilt/families.hpp"

#include <map>
#include <sstream>

namespace tautilt {

namespace {

// Shared builder for (shifted) Young diagrams.  row_start(i) gives the first
// column of 1-based row i; row i covers columns row_start(i) .. row_start(i)
// + parts[i-1] - 1.  Vertices are numbered row-major.
template <typename RowStart>
FamilyAlgebra diagram_algebra(const std::vector<int>& parts, RowStart row_start) {
  FamilyAlgebra fam;
  const int rows = static_cast<int>(parts.size());
  std::map<std::pair<int, int>, int> vertex;
  for (int r = 1; r <= rows; ++r) {
    for (int c = row_start(r); c < row_start(r) + parts[r - 1]; ++c) {
      vertex[{r, c}] = fam.bq.q.n++;
      fam.cell.emplace_back(r, c);
    }
  }
  auto has = [&](int r, int c) { return vertex.count({r, c}) > 0; };

  // arrows in row-major vertex order: right first, then down
  std::map<std::pair<int, int>, int> right, down;  // arrow index by source cell
  for (auto& [rc, v] : vertex) {
    auto [r, c] = rc;
    if (has(r, c + 1)) {
      right[rc] = static_cast<int>(fam.bq.q.arrows.size());
      fam.bq.q.push_arrow(v, vertex[{r, c + 1}]);
    }
    if (has(r + 1, c)) {
      down[rc] = static_cast<int>(fam.bq.q.arrows.size());
      fam.bq.q.push_arrow(v, vertex[{r + 1, c}]);
    }
  }

  // one commutativity generator per complete unit square, row-major by the
  // top-left corner: (right then down) - (down then right)
  for (auto& [rc, v] : vertex) {
    (void)v;
    auto [r, c] = rc;
    if (has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1)) {
      Relation rel;
      rel.terms.emplace_back(Rat(1), Path{right[rc], down[{r, c + 1}]});
      rel.terms.emplace_back(Rat(-1), Path{down[rc], right[{r + 1, c}]});
      fam.bq.rels.push_back(rel);
    }
  }
  return fam;
}

}  // namespace

FamilyAlgebra staircase(const Partition& la) {
  FamilyAlgebra fam = diagram_algebra(la.parts, [](int) { return 1; });
  fam.name = "staircase(" + format_parts(la.parts) + ")";
  return fam;
}

FamilyAlgebra shifted_staircase(const ShiftedPartition& la) {
  FamilyAlgebra fam = diagram_algebra(la.parts, [](int r) { return r; });
  fam.name = "shifted(" + format_parts(la.parts) + ")";
  return fam;
}

FamilyAlgebra linear_a(int n) {
  if (n < 1) throw input_error("linear_a needs n >= 1");
  FamilyAlgebra fam;
  fam.bq.q.n = n;
  for (int v = 0; v + 1 < n; ++v) fam.bq.q.push_arrow(v, v + 1);
  fam.name = "linear_a(" + std::to_string(n) + ")";
  return fam;
}

FamilyAlgebra family_d(int n) {
  if (n < 3) throw input_error("d needs n >= 3");
  FamilyAlgebra fam;
  fam.bq.q.n = n;
  fam.bq.q.push_arrow(0, 2);
  fam.bq.q.push_arrow(1, 2);
  for (int v = 2; v + 1 < n; ++v) fam.bq.q.push_arrow(v, v + 1);
  fam.name = "d(" + std::to_string(n) + ")";
  return fam;
}

FamilyAlgebra family_lambda(int n) {
  if (n < 3) throw input_error("lambda needs n >= 3");
  FamilyAlgebra fam;
  fam.bq.q.n = n;
  fam.bq.q.push_arrow(0, 1);  // 1 -> 2
  fam.bq.q.push_arrow(0, 2);  // 1 -> 3
  if (n >= 4) {
    fam.bq.q.push_arrow(1, 3);  // 2 -> 4
    fam.bq.q.push_arrow(2, 3);  // 3 -> 4
    for (int v = 3; v + 1 < n; ++v) fam.bq.q.push_arrow(v, v + 1);
    Relation rel;
    rel.terms.emplace_back(Rat(1), Path{0, 2});
    rel.terms.emplace_back(Rat(-1), Path{1, 3});
    fam.bq.rels.push_back(rel);
  }
  fam.name = "lambda(" + std::to_string(n) + ")";
  return fam;
}

FamilyAlgebra family_a1(int n) {
  if (n < 2) throw input_error("a1 needs n >= 2");
  FamilyAlgebra fam = linear_a(n);
  if (n >= 3) {
    Relation rel;
    rel.terms.emplace_back(Rat(1), Path{0, 1});
    fam.bq.rels.push_back(rel);
  }
  fam.name = "a1(" + std::to_string(n) + ")";
  return fam;
}

FamilyAlgebra grid(int m, int n) {
  if (m < 1 || n < 1) throw input_error("grid needs m, n >= 1");
  Partition la;
  la.parts.assign(n, m);
  FamilyAlgebra fam = staircase(la);
  fam.name = "grid(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return fam;
}

FamilyAlgebra triangle(int n) {
  if (n < 1) throw input_error("triangle needs n >= 1");
  ShiftedPartition la;
  for (int k = n; k >= 1; --k) la.parts.push_back(k);
  FamilyAlgebra fam = shifted_staircase(la);
  fam.name = "triangle(" + std::to_string(n) + ")";
  return fam;
}

FamilyAlgebra auslander_a(int m) {
  if (m < 2) throw input_error("auslander_a needs m >= 2");
  FamilyAlgebra fam = triangle(m);
  // mesh zero relations along the diagonal: (i,i) -> (i,i+1) -> (i+1,i+1)
  // cell (r,c) of the triangle is vertex sum_{k<r}(m-k+1)... recover via fam.cell
  std::map<std::pair<int, int>, int> vertex;
  for (int v = 0; v < fam.bq.q.n; ++v) vertex[fam.cell[v]] = v;
  auto arrow_between = [&](int u, int w) {
    for (size_t a = 0; a < fam.bq.q.arrows.size(); ++a)
      if (fam.bq.q.arrows[a].src == u && fam.bq.q.arrows[a].dst == w)
        return static_cast<int>(a);
    throw std::logic_error("mesh arrow missing");
  };
  for (int i = 1; i <= m - 1; ++i) {
    int a = arrow_between(vertex[{i, i}], vertex[{i, i + 1}]);
    int b = arrow_between(vertex[{i, i + 1}], vertex[{i + 1, i + 1}]);
    Relation rel;
    rel.terms.emplace_back(Rat(1), Path{a, b});
    fam.bq.rels.push_back(rel);
  }
  fam.name = "auslander_a(" + std::to_string(m) + ")";
  return fam;
}

FamilyAlgebra make_family(const std::string& spec) {
  size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto int_args = [&](size_t count) {
    std::vector<int> out;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stoi(item));
      } catch (const std::logic_error&) {
        throw input_error("bad family parameter '" + item + "'");
      }
    }
    if (out.size() != count)
      throw input_error("family '" + name + "' expects " + std::to_string(count) +
                        " parameter(s)");
    return out;
  };
  if (name == "staircase") return staircase(parse_partition(args));
  if (name == "shifted") return shifted_staircase(parse_shifted_partition(args));
  if (name == "linear_a") return linear_a(int_args(1)[0]);
  if (name == "d") return family_d(int_args(1)[0]);
  if (name == "lambda") return family_lambda(int_args(1)[0]);
  if (name == "a1") return family_a1(int_args(1)[0]);
  if (name == "triangle") return triangle(int_args(1)[0]);
  if (name == "auslander_a") return auslander_a(int_args(1)[0]);
  if (name == "grid") {
    auto v = int_args(2);
    return grid(v[0], v[1]);
  }
  throw input_error("unknown family '" + name + "'");
}

}  // namespace tautilt
