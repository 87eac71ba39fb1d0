#include "rnagell/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rnagell/json_util.hpp"

namespace rnagell {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GridCell {
  mpz_class D;
  unsigned long p1, p2;
};

std::vector<unsigned long> odd_primes_upto(unsigned long n) {
  if (n > 100000000UL) throw std::invalid_argument("prime bound too large for the sieve");
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    if (i >= 3) out.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<GridCell> build_grid(const SearchSpec& spec) {
  if (spec.d_min < 1 || spec.d_max < spec.d_min) throw std::invalid_argument("bad D range");
  if (spec.y_bound < 1) throw std::invalid_argument("y bound must be >= 1");
  auto primes = odd_primes_upto(spec.prime_bound);
  std::vector<GridCell> grid;
  for (mpz_class D = spec.d_min; D <= spec.d_max; ++D) {
    for (size_t i = 0; i < primes.size(); ++i) {
      if (mpz_divisible_ui_p(D.get_mpz_t(), primes[i])) continue;
      for (size_t j = i + 1; j < primes.size(); ++j) {
        if (mpz_divisible_ui_p(D.get_mpz_t(), primes[j])) continue;
        grid.push_back({D, primes[i], primes[j]});
      }
    }
  }
  if (spec.sample_count && *spec.sample_count < grid.size()) {
    // explicit Fisher-Yates so the draw is reproducible everywhere
    std::mt19937_64 rng(spec.sample_seed);
    std::vector<size_t> idx(grid.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (unsigned long i = 0; i < *spec.sample_count; ++i)
      std::swap(idx[i], idx[i + rng() % (idx.size() - i)]);
    idx.resize(*spec.sample_count);
    std::sort(idx.begin(), idx.end());
    std::vector<GridCell> sampled;
    sampled.reserve(idx.size());
    for (size_t i : idx) sampled.push_back(grid[i]);
    grid.swap(sampled);
  }
  return grid;
}

SearchRecord compute_record(const GridCell& cell, const SearchSpec& spec) {
  Instance inst(cell.D, mpz_class(cell.p1), mpz_class(cell.p2));
  auto sols = solve(inst, spec.y_bound);
  SearchRecord rec;
  rec.D = cell.D;
  rec.p1 = cell.p1;
  rec.p2 = cell.p2;
  rec.total = sols.size();
  for (const auto& sol : sols) ++rec.per_class[quarter_class(sol, inst)];
  rec.max_y = sols.empty() ? mpz_class(0) : sols.back().y;
  if (spec.keep_solutions) rec.solutions = std::move(sols);
  return rec;
}

void write_cursor(const fs::path& dir, size_t count) {
  fs::path tmp = dir / "cursor.tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << count << "\n";
  }
  fs::rename(tmp, dir / "cursor");
}

struct CheckpointPrefix {
  std::vector<SearchRecord> records;
  bool rewrite = false;  // log had a truncated tail; rewrite it before appending
};

// Completed record prefix from an existing checkpoint; nullopt means the
// checkpoint is unusable and the caller starts fresh.
std::optional<CheckpointPrefix> load_checkpoint(const fs::path& dir,
                                                const std::vector<GridCell>& cells) {
  fs::path log = dir / "records.jsonl";
  if (!fs::exists(log)) return CheckpointPrefix{};
  std::ifstream in(log);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);

  CheckpointPrefix out;
  for (size_t i = 0; i < lines.size(); ++i) {
    SearchRecord rec;
    try {
      rec = record_from_json(lines[i]);
    } catch (const std::exception&) {
      if (i + 1 == lines.size()) {  // interrupted mid-write; keep the prefix
        out.rewrite = true;
        break;
      }
      return std::nullopt;
    }
    if (i >= cells.size() || rec.D != cells[i].D || rec.p1 != cells[i].p1 ||
        rec.p2 != cells[i].p2)
      return std::nullopt;  // log does not match this spec's grid
    out.records.push_back(std::move(rec));
  }
  if (fs::exists(dir / "cursor")) {
    std::ifstream cur(dir / "cursor");
    size_t n = 0;
    if (!(cur >> n)) return std::nullopt;
    if (n != out.records.size())
      std::cerr << "search: cursor disagrees with record log; trusting the log\n";
  }
  return out;
}

}  // namespace

std::vector<SearchRecord> run(const SearchSpec& spec, unsigned workers,
                              const std::optional<std::string>& checkpoint_dir) {
  if (workers < 1) throw std::invalid_argument("need at least one worker");
  const std::vector<GridCell> cells = build_grid(spec);

  std::vector<SearchRecord> records(cells.size());
  size_t resumed = 0;
  std::ofstream log;
  fs::path dir;
  if (checkpoint_dir) {
    dir = *checkpoint_dir;
    fs::create_directories(dir);
    auto prefix = load_checkpoint(dir, cells);
    if (!prefix) {
      std::cerr << "search: corrupt checkpoint in " << dir << "; starting fresh\n";
      fs::remove(dir / "records.jsonl");
      fs::remove(dir / "cursor");
      prefix.emplace();
    }
    resumed = prefix->records.size();
    for (size_t i = 0; i < resumed; ++i) records[i] = std::move(prefix->records[i]);
    if (prefix->rewrite) {
      std::ofstream fixed(dir / "records.jsonl.tmp", std::ios::trunc);
      for (size_t i = 0; i < resumed; ++i) fixed << record_to_json(records[i]) << "\n";
      fixed.close();
      fs::rename(dir / "records.jsonl.tmp", dir / "records.jsonl");
    }
    log.open(dir / "records.jsonl", resumed > 0 ? std::ios::app : std::ios::trunc);
    if (!log) throw std::runtime_error("cannot open record log in " + dir.string());
  }

  std::atomic<size_t> next{resumed};
  std::vector<std::atomic<bool>> done(cells.size());
  for (size_t i = 0; i < resumed; ++i) done[i].store(true, std::memory_order_relaxed);

  auto worker_fn = [&] {
    for (;;) {
      size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= cells.size()) return;
      records[i] = compute_record(cells[i], spec);
      done[i].store(true, std::memory_order_release);
    }
  };

  std::vector<std::thread> pool;
  unsigned nthreads = std::min<size_t>(workers, cells.size() > resumed ? cells.size() - resumed : 0);
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker_fn);

  if (checkpoint_dir) {
    size_t written = resumed;
    size_t since_flush = 0;
    while (written < cells.size()) {
      if (done[written].load(std::memory_order_acquire)) {
        log << record_to_json(records[written]) << "\n";
        ++written;
        if (++since_flush >= 256) {
          log.flush();
          write_cursor(dir, written);
          since_flush = 0;
        }
      } else {
        std::this_thread::sleep_for(std::chrono::microseconds(500));
      }
    }
    log.flush();
    write_cursor(dir, written);
  }

  for (auto& t : pool) t.join();
  return records;
}

SearchSummary summarize(const std::vector<SearchRecord>& records, size_t top_n) {
  SearchSummary s;
  for (const auto& r : records) {
    ++s.histogram[r.total];
    s.max_count = std::max(s.max_count, r.total);
  }
  std::vector<SearchRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(), [](const SearchRecord& a, const SearchRecord& b) {
    if (a.total != b.total) return a.total > b.total;
    if (a.D != b.D) return a.D < b.D;
    if (a.p1 != b.p1) return a.p1 < b.p1;
    return a.p2 < b.p2;
  });
  if (sorted.size() > top_n) sorted.resize(top_n);
  s.extremal = std::move(sorted);
  return s;
}

ClaimCheck verify_claim(const std::vector<SearchRecord>& records, unsigned long cap) {
  ClaimCheck c;
  for (const auto& r : records) {
    if (r.total > cap) {
      c.ok = false;
      c.violations.push_back(r);
    }
  }
  return c;
}

std::string record_to_json(const SearchRecord& rec) {
  ordered_json j;
  j["D"] = json_int(rec.D);
  j["p1"] = json_int(rec.p1);
  j["p2"] = json_int(rec.p2);
  j["total"] = rec.total;
  ordered_json classes = ordered_json::object();
  for (const auto& [key, count] : rec.per_class) {
    std::string name = std::to_string(key.j) + "," + std::to_string(key.u) + "," +
                       std::to_string(key.v);
    classes[name] = count;
  }
  j["classes"] = classes;
  j["maxY"] = json_int(rec.max_y);
  return j.dump();
}

SearchRecord record_from_json(const std::string& line) {
  ordered_json j = ordered_json::parse(line);
  SearchRecord rec;
  rec.D = int_from_json(j.at("D"));
  rec.p1 = int_from_json(j.at("p1"));
  rec.p2 = int_from_json(j.at("p2"));
  rec.total = j.at("total").get<unsigned long>();
  for (const auto& [name, count] : j.at("classes").items()) {
    ClassKey key;
    if (std::sscanf(name.c_str(), "%d,%d,%d", &key.j, &key.u, &key.v) != 3)
      throw std::invalid_argument("bad class key: " + name);
    rec.per_class[key] = count.get<unsigned long>();
  }
  rec.max_y = int_from_json(j.at("maxY"));
  return rec;
}

std::string summary_csv(const SearchSummary& s) {
  std::ostringstream out;
  out << "count,instances\n";
  for (const auto& [count, instances] : s.histogram) out << count << "," << instances << "\n";
  return out.str();
}

std::string extremal_csv(const SearchSummary& s) {
  std::ostringstream out;
  out << "D,p1,p2,total,maxY\n";
  for (const auto& r : s.extremal)
    out << r.D.get_str() << "," << r.p1.get_str() << "," << r.p2.get_str() << "," << r.total << ","
        << r.max_y.get_str() << "\n";
  return out.str();
}

}  // namespace rnagell
