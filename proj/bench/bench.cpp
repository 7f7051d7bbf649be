// Serial reference vs OpenMP kernels on the data-parallel sweeps.
#include <chrono>
#include <cstdio>
#include <vector>

#include "deltaknot/family.hpp"
#include "deltaknot/parallel.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<dk::ConwayWord> even_words() {
  std::vector<dk::ConwayWord> words;
  for (dk::Entry a = 2; a <= 8; a += 2)
    for (dk::Entry b = 2; b <= 8; b += 2)
      for (dk::Entry c = 2; c <= 8; c += 2)
        for (dk::Entry d = 2; d <= 8; d += 2) words.push_back({a, b, c, d});
  return words;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", dk::parallel_threads());

  const dk::FamilyBounds bounds{2, -8, 8};
  dk::FamilyScan serial, parallel;
  const double ts = seconds([&] { serial = dk::enumerate_family_serial(bounds); });
  const double tp = seconds([&] { parallel = dk::enumerate_family(bounds); });
  std::printf("enumerate_family  %zu members  serial %.3fs  parallel %.3fs  same=%d\n", serial.members.size(), ts,
              tp, serial.members == parallel.members);

  const auto words = even_words();
  std::vector<std::optional<dk::Entry>> a2s, a2p;
  const double as = seconds([&] { a2s = dk::a2_batch_serial(words); });
  const double ap = seconds([&] { a2p = dk::a2_batch(words); });
  std::printf("a2_batch          %zu words    serial %.3fs  parallel %.3fs  same=%d\n", words.size(), as, ap,
              a2s == a2p);

  std::vector<dk::ConwayWord> small;
  for (const auto& w : words)
    if (w.crossing_count() <= 14) small.push_back(w);
  dk::SearchOptions options;
  std::vector<std::optional<dk::SearchResult>> rs, rp;
  const double ss = seconds([&] { rs = dk::search_batch_serial(small, options); });
  const double sp = seconds([&] { rp = dk::search_batch(small, options); });
  bool same = rs.size() == rp.size();
  for (std::size_t i = 0; same && i < rs.size(); ++i) same = rs[i].has_value() == rp[i].has_value() && (!rs[i] || rs[i]->cost == rp[i]->cost);
  std::printf("search_batch      %zu words    serial %.3fs  parallel %.3fs  same=%d\n", small.size(), ss, sp, same);
  return 0;
}
