#include "minkhyp/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "minkhyp/io.hpp"

namespace minkhyp {

long GridSpec::size() const {
  long s = 1;
  for (int a = 0; a < dim(); ++a) s *= extents[a];
  return s;
}

long GridSpec::flat(const Eigen::VectorXi& idx) const {
  long k = 0;
  for (int a = 0; a < dim(); ++a) k = k * extents[a] + idx[a];
  return k;
}

Eigen::VectorXi GridSpec::unflat(long k) const {
  Eigen::VectorXi idx(dim());
  for (int a = dim() - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(k % extents[a]);
    k /= extents[a];
  }
  return idx;
}

Vec GridSpec::node(const Eigen::VectorXi& idx) const {
  Vec x = origin;
  for (int a = 0; a < dim(); ++a) x[a] += h * idx[a];
  return x;
}

bool GridSpec::interior(const Eigen::VectorXi& idx) const {
  for (int a = 0; a < dim(); ++a)
    if (idx[a] == 0 || idx[a] == extents[a] - 1) return false;
  return true;
}

GridSpec GridSpec::make(const Vec& origin, double h, const Eigen::VectorXi& extents) {
  if (!(h > 0)) throw InvalidParams("GridSpec: spacing must be positive");
  const int d = static_cast<int>(extents.size());
  if (d != 2 && d != 3) throw InvalidParams("GridSpec: dimension must be 2 or 3");
  for (int a = 0; a < d; ++a)
    if (extents[a] < 2) throw InvalidParams("GridSpec: need at least 2 nodes per axis");
  GridSpec g;
  g.origin = origin;
  g.h = h;
  g.extents = extents;
  return g;
}

GridSpec GridSpec::cover(const Vec& lo, const Vec& hi, double h) {
  const int d = static_cast<int>(lo.size());
  Eigen::VectorXi ext(d);
  for (int a = 0; a < d; ++a) {
    ext[a] = static_cast<int>(std::ceil((hi[a] - lo[a]) / h - 1e-12)) + 1;
    if (ext[a] < 2) ext[a] = 2;
  }
  return make(lo, h, ext);
}

std::vector<std::pair<int, double>> d1_stencil(int i, int count, double h) {
  if (i == 0) return {{0, -1.5 / h}, {1, 2.0 / h}, {2, -0.5 / h}};
  if (i == count - 1) return {{0, 1.5 / h}, {-1, -2.0 / h}, {-2, 0.5 / h}};
  return {{-1, -0.5 / h}, {1, 0.5 / h}};
}

std::vector<std::pair<int, double>> d2_stencil(int i, int count, double h) {
  const double h2 = h * h;
  if (i == 0) return {{0, 2.0 / h2}, {1, -5.0 / h2}, {2, 4.0 / h2}, {3, -1.0 / h2}};
  if (i == count - 1) return {{0, 2.0 / h2}, {-1, -5.0 / h2}, {-2, 4.0 / h2}, {-3, -1.0 / h2}};
  return {{-1, 1.0 / h2}, {0, -2.0 / h2}, {1, 1.0 / h2}};
}

GraphPatch GraphPatch::from_values(GridSpec grid, Vec values) {
  if (values.size() != grid.size()) throw InvalidParams("GraphPatch: value count mismatch");
  GraphPatch p;
  p.grid_ = std::move(grid);
  p.values_ = std::move(values);
  p.source_ = DerivativeSource::CentralDifferences;
  return p;
}

GraphPatch GraphPatch::from_function(GridSpec grid, const std::function<double(const Vec&)>& u,
                                     DerivativeSource source, JetCallback jets) {
  Vec values(grid.size());
  for (long k = 0; k < grid.size(); ++k) values[k] = u(grid.node(grid.unflat(k)));
  GraphPatch p = from_values(std::move(grid), std::move(values));
  p.source_ = source;
  if (source == DerivativeSource::AnalyticCallback && !jets)
    throw InvalidParams("GraphPatch: analytic-callback source requires a jet callback");
  p.jets_ = std::move(jets);
  return p;
}

Vec GraphPatch::gradient(const Eigen::VectorXi& idx) const {
  if (source_ == DerivativeSource::AnalyticCallback) return jets_(grid_.node(idx)).du;
  const int d = grid_.dim();
  Vec g(d);
  for (int a = 0; a < d; ++a) {
    double acc = 0;
    for (auto [off, w] : d1_stencil(idx[a], grid_.extents[a], grid_.h)) {
      Eigen::VectorXi j = idx;
      j[a] += off;
      acc += w * values_[grid_.flat(j)];
    }
    g[a] = acc;
  }
  return g;
}

JetPoint GraphPatch::fd_jet(const Eigen::VectorXi& idx) const {
  const int d = grid_.dim();
  JetPoint jet;
  jet.u = values_[grid_.flat(idx)];
  jet.du.resize(d);
  jet.d2u.resize(d, d);
  for (int a = 0; a < d; ++a) {
    double acc = 0;
    for (auto [off, w] : d1_stencil(idx[a], grid_.extents[a], grid_.h)) {
      Eigen::VectorXi j = idx;
      j[a] += off;
      acc += w * values_[grid_.flat(j)];
    }
    jet.du[a] = acc;
    acc = 0;
    for (auto [off, w] : d2_stencil(idx[a], grid_.extents[a], grid_.h)) {
      Eigen::VectorXi j = idx;
      j[a] += off;
      acc += w * values_[grid_.flat(j)];
    }
    jet.d2u(a, a) = acc;
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      double acc = 0;
      for (auto [oa, wa] : d1_stencil(idx[a], grid_.extents[a], grid_.h))
        for (auto [ob, wb] : d1_stencil(idx[b], grid_.extents[b], grid_.h)) {
          Eigen::VectorXi j = idx;
          j[a] += oa;
          j[b] += ob;
          acc += wa * wb * values_[grid_.flat(j)];
        }
      jet.d2u(a, b) = jet.d2u(b, a) = acc;
    }
  return jet;
}

JetPoint GraphPatch::jet(const Eigen::VectorXi& idx) const {
  if (source_ == DerivativeSource::AnalyticCallback) return jets_(grid_.node(idx));
  return fd_jet(idx);
}

double GraphPatch::max_gradient_norm() const {
  double m = 0;
  for (long k = 0; k < grid_.size(); ++k) m = std::max(m, gradient(grid_.unflat(k)).norm());
  return m;
}

void GraphPatch::write_csv(const std::string& csv_path, const std::string& json_path) const {
  std::vector<std::string> header;
  for (int a = 0; a < grid_.dim(); ++a) header.push_back("x" + std::to_string(a + 1));
  header.push_back("u");
  CsvWriter csv(csv_path, header);
  for (long k = 0; k < grid_.size(); ++k) {
    const Vec x = grid_.node(grid_.unflat(k));
    std::vector<double> row(x.data(), x.data() + x.size());
    row.push_back(values_[k]);
    csv.row(row);
  }
  nlohmann::json j;
  j["origin"] = std::vector<double>(grid_.origin.data(), grid_.origin.data() + grid_.dim());
  j["h"] = grid_.h;
  j["extents"] = std::vector<int>(grid_.extents.data(), grid_.extents.data() + grid_.dim());
  j["derivative_source"] = to_string(source_);
  write_json(json_path, j);
}

GraphPatch GraphPatch::read_csv(const std::string& csv_path, const std::string& json_path) {
  const nlohmann::json j = read_json(json_path);
  const auto origin_v = j.at("origin").get<std::vector<double>>();
  const auto extents_v = j.at("extents").get<std::vector<int>>();
  Vec origin = Eigen::Map<const Vec>(origin_v.data(), static_cast<long>(origin_v.size()));
  Eigen::VectorXi extents =
      Eigen::Map<const Eigen::VectorXi>(extents_v.data(), static_cast<long>(extents_v.size()));
  GridSpec grid = GridSpec::make(origin, j.at("h").get<double>(), extents);

  std::ifstream in(csv_path);
  if (!in) throw Error("cannot open " + csv_path);
  std::string line;
  std::getline(in, line);  // header
  Vec values(grid.size());
  long k = 0;
  while (std::getline(in, line) && k < grid.size()) {
    const auto pos = line.find_last_of(',');
    values[k++] = std::stod(line.substr(pos + 1));
  }
  if (k != grid.size()) throw Error("GraphPatch::read_csv: row count mismatch");
  return GraphPatch::from_values(std::move(grid), std::move(values));
}

}  // namespace minkhyp
