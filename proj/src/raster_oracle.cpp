// Copyright 2026 The Cheeger Polygon Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cheeger/raster_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include "cheeger/errors.hpp"

namespace cheeger {

Point RasterMask::center(std::size_t i, std::size_t j) const {
  return {origin.x + (static_cast<double>(i) + 0.5) * cell_size, origin.y + (static_cast<double>(j) + 0.5) * cell_size};
}

std::size_t RasterMask::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::size_t RasterMask::component_count() const {
  std::vector<std::uint32_t> label(bits.size(), 0);
  std::vector<std::size_t> stack;
  std::size_t n = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (!bits[k] || label[k]) continue;
    ++n;
    label[k] = static_cast<std::uint32_t>(n);
    stack.push_back(k);
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      const std::size_t i = c % width;
      const std::size_t j = c / width;
      auto visit = [&](std::size_t q) {
        if (bits[q] && !label[q]) {
          label[q] = static_cast<std::uint32_t>(n);
          stack.push_back(q);
        }
      };
      if (i > 0) visit(c - 1);
      if (i + 1 < width) visit(c + 1);
      if (j > 0) visit(c - width);
      if (j + 1 < height) visit(c + width);
    }
  }
  return n;
}

RasterMask rasterize(const JordanPolygon& polygon, double resolution, double r_max) {
  const BoundingBox box = polygon.bbox();
  if (!(resolution * box.diagonal() >= 64.0)) {
    throw DomainError("raster resolution gives fewer than 64 cells across the bounding box");
  }
  RasterMask m;
  m.resolution = resolution;
  m.cell_size = 1.0 / resolution;
  const auto pad_cells = static_cast<std::size_t>(std::ceil(2.0 * std::max(r_max, 0.0) * resolution)) + 2;
  const double pad = static_cast<double>(pad_cells) * m.cell_size;
  m.origin = {box.lo.x - pad, box.lo.y - pad};
  m.width = static_cast<std::size_t>(std::ceil(box.width() * resolution)) + 2 * pad_cells;
  m.height = static_cast<std::size_t>(std::ceil(box.height() * resolution)) + 2 * pad_cells;
  m.bits.assign(m.width * m.height, 0);

  // Scanline fill: crossings of each row's center line, paired even-odd.
  const auto& v = polygon.vertices();
  std::vector<double> xs;
  for (std::size_t j = 0; j < m.height; ++j) {
    const double y = m.center(0, j).y;
    xs.clear();
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Point a = v[k];
      const Point b = v[(k + 1) % v.size()];
      if ((a.y <= y) == (b.y <= y)) continue;
      xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      // Cells whose center x lies in [xs[k], xs[k+1]).
      const double lo = (xs[k] - m.origin.x) * resolution - 0.5;
      const double hi = (xs[k + 1] - m.origin.x) * resolution - 0.5;
      const auto i0 = static_cast<std::ptrdiff_t>(std::ceil(lo));
      const auto i1 = static_cast<std::ptrdiff_t>(std::ceil(hi));
      for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(i0, 0); i < std::min<std::ptrdiff_t>(i1, m.width); ++i) {
        m.bits[j * m.width + static_cast<std::size_t>(i)] = 1;
      }
    }
  }
  m.warning = m.area() < 0.5 * polygon.area();
  return m;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower envelope of parabolas (Felzenszwalb-Huttenlocher) along one line.
void envelope_1d(const double* f, double* d, std::size_t n, std::vector<std::ptrdiff_t>& v, std::vector<double>& z) {
  v.assign(n, 0);
  z.assign(n + 1, 0.0);
  std::size_t k = 0;
  std::size_t first = n;
  for (std::size_t q = 0; q < n; ++q) {
    if (f[q] < kInf) {
      first = q;
      break;
    }
  }
  if (first == n) {
    std::fill(d, d + n, kInf);
    return;
  }
  v[0] = static_cast<std::ptrdiff_t>(first);
  z[0] = -kInf;
  z[1] = kInf;
  for (std::size_t q = first + 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    const double qd = static_cast<double>(q);
    while (true) {
      const double p = static_cast<double>(v[k]);
      const double s = ((f[q] + qd * qd) - (f[v[k]] + p * p)) / (2.0 * qd - 2.0 * p);
      if (s <= z[k]) {
        if (k == 0) {
          v[0] = static_cast<std::ptrdiff_t>(q);
          z[1] = kInf;
          break;
        }
        --k;
        continue;
      }
      ++k;
      v[k] = static_cast<std::ptrdiff_t>(q);
      z[k] = s;
      z[k + 1] = kInf;
      break;
    }
  }
  k = 0;
  for (std::size_t q = 0; q < n; ++q) {
    while (z[k + 1] < static_cast<double>(q)) ++k;
    const double dq = static_cast<double>(q) - static_cast<double>(v[k]);
    d[q] = dq * dq + f[v[k]];
  }
}

// Squared distance in cells from every cell to the nearest cell where
// `site` is true.
std::vector<double> squared_distance_to(const RasterMask& m, bool site) {
  const std::size_t w = m.width;
  const std::size_t h = m.height;
  std::vector<double> g(w * h);
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = (m.bits[k] != 0) == site ? 0.0 : kInf;
  std::vector<std::ptrdiff_t> v;
  std::vector<double> z;
  std::vector<double> col(h);
  std::vector<double> out(std::max(w, h));
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = 0; j < h; ++j) col[j] = g[j * w + i];
    envelope_1d(col.data(), out.data(), h, v, z);
    for (std::size_t j = 0; j < h; ++j) g[j * w + i] = out[j];
  }
  for (std::size_t j = 0; j < h; ++j) {
    envelope_1d(&g[j * w], out.data(), w, v, z);
    std::copy(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(w), g.begin() + static_cast<std::ptrdiff_t>(j * w));
  }
  return g;
}

RasterMask with_bits(const RasterMask& like, std::vector<std::uint8_t> bits) {
  RasterMask m = like;
  m.bits = std::move(bits);
  m.warning = false;
  return m;
}

}  // namespace

std::vector<double> distance_to_unset(const RasterMask& mask) {
  std::vector<double> d = squared_distance_to(mask, false);
  for (double& x : d) x = std::sqrt(x) * mask.cell_size;
  return d;
}

RasterMask oracle_erode(const RasterMask& mask, double r) {
  const std::vector<double> d2 = squared_distance_to(mask, false);
  const double t = r * mask.resolution;
  std::vector<std::uint8_t> bits(d2.size());
  for (std::size_t k = 0; k < d2.size(); ++k) bits[k] = d2[k] >= t * t ? 1 : 0;
  return with_bits(mask, std::move(bits));
}

RasterMask oracle_dilate(const RasterMask& mask, double r) {
  const std::vector<double> d2 = squared_distance_to(mask, true);
  const double t = r * mask.resolution;
  std::vector<std::uint8_t> bits(d2.size());
  // Strict: an eroded cell's open r-disk holds no unset center, so the
  // opening stays inside the mask.
  for (std::size_t k = 0; k < d2.size(); ++k) bits[k] = d2[k] < t * t ? 1 : 0;
  return with_bits(mask, std::move(bits));
}

RasterMask oracle_open(const RasterMask& mask, double r) { return oracle_dilate(oracle_erode(mask, r), r); }

bool oracle_no_neck(const RasterMask& mask, double r) { return oracle_erode(mask, r).component_count() <= 1; }

double oracle_perimeter(const RasterMask& mask) {
  if (mask.empty()) throw DomainError("perimeter of an empty mask");
  const std::size_t w = mask.width;
  const std::size_t h = mask.height;
  constexpr double sigma = 1.5;
  constexpr int radius = 5;
  std::array<double, 2 * radius + 1> kernel{};
  double total = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    kernel[k + radius] = std::exp(-0.5 * k * k / (sigma * sigma));
    total += kernel[k + radius];
  }
  for (double& k : kernel) k /= total;

  std::vector<double> a(w * h);
  std::vector<double> b(w * h, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = mask.bits[k];
  for (std::size_t j = 0; j < h; ++j) {
    for (std::size_t i = 0; i < w; ++i) {
      double s = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        const auto ii = static_cast<std::ptrdiff_t>(i) + k;
        if (ii >= 0 && ii < static_cast<std::ptrdiff_t>(w)) s += kernel[k + radius] * a[j * w + static_cast<std::size_t>(ii)];
      }
      b[j * w + i] = s;
    }
  }
  for (std::size_t j = 0; j < h; ++j) {
    for (std::size_t i = 0; i < w; ++i) {
      double s = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        const auto jj = static_cast<std::ptrdiff_t>(j) + k;
        if (jj >= 0 && jj < static_cast<std::ptrdiff_t>(h)) s += kernel[k + radius] * b[static_cast<std::size_t>(jj) * w + i];
      }
      a[j * w + i] = s;
    }
  }

  // Marching squares at level 0.5 with linear interpolation on cell edges.
  double len = 0.0;
  for (std::size_t j = 0; j + 1 < h; ++j) {
    for (std::size_t i = 0; i + 1 < w; ++i) {
      const double v00 = a[j * w + i] - 0.5;
      const double v10 = a[j * w + i + 1] - 0.5;
      const double v11 = a[(j + 1) * w + i + 1] - 0.5;
      const double v01 = a[(j + 1) * w + i] - 0.5;
      std::array<Point, 4> hits;
      int n = 0;
      auto edge = [&](double va, double vb, Point pa, Point pb) {
        if ((va < 0.0) == (vb < 0.0)) return;
        const double t = va / (va - vb);
        hits[n++] = pa + (pb - pa) * t;
      };
      edge(v00, v10, {0, 0}, {1, 0});
      edge(v10, v11, {1, 0}, {1, 1});
      edge(v11, v01, {1, 1}, {0, 1});
      edge(v01, v00, {0, 1}, {0, 0});
      if (n == 2) {
        len += distance(hits[0], hits[1]);
      } else if (n == 4) {
        const double c = 0.25 * (v00 + v10 + v11 + v01);
        // The center joins the (0,0) corner or cuts it off.
        if ((c < 0.0) == (v00 < 0.0)) {
          len += distance(hits[0], hits[1]) + distance(hits[2], hits[3]);
        } else {
          len += distance(hits[0], hits[3]) + distance(hits[1], hits[2]);
        }
      }
    }
  }
  return len * mask.cell_size;
}

OracleCheeger oracle_cheeger(const RasterMask& mask) {
  std::vector<double> d = distance_to_unset(mask);
  std::sort(d.begin(), d.end());
  const double cell_area = mask.cell_size * mask.cell_size;
  // Cells with distance >= r, from the sorted list.
  auto eroded_area = [&](double r) {
    const auto it = std::lower_bound(d.begin(), d.end(), r);
    return static_cast<double>(d.end() - it) * cell_area;
  };
  double lo = 0.0;
  double hi = d.empty() ? 0.0 : d.back();
  for (int it = 0; it < 100 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (kPi * mid * mid < eroded_area(mid) ? lo : hi) = mid;
  }
  const double r = 0.5 * (lo + hi);
  return {r, r > 0.0 ? 1.0 / r : kInf};
}

void write_pgm(const RasterMask& mask, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << "P5\n" << mask.width << ' ' << mask.height << "\n255\n";
  std::vector<char> row(mask.width);
  for (std::size_t j = mask.height; j-- > 0;) {
    for (std::size_t i = 0; i < mask.width; ++i) row[i] = mask.at(i, j) ? static_cast<char>(255) : 0;
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

}  // namespace cheeger
