#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qharmonic/verify.hpp"

namespace qharmonic {

namespace {

void compositions_of_weight(int remaining, std::vector<int>& current,
                            std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(Composition(current));
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    current.push_back(first);
    compositions_of_weight(remaining - first, current, out);
    current.pop_back();
  }
}

std::vector<Params> build_grid(IdentityId id, const SweepOptions& opt) {
  std::vector<Params> grid;
  const auto comps = [&] {
    std::vector<Composition> all = compositions_up_to_weight(opt.max_weight);
    if (opt.max_length > 0) {
      std::vector<Composition> kept;
      for (Composition& s : all) {
        if (s.size() <= opt.max_length) kept.push_back(std::move(s));
      }
      all = std::move(kept);
    }
    return all;
  };
  switch (id) {
    case IdentityId::theorem1:
    case IdentityId::cor_limit_q1:
    case IdentityId::weak_strict_expansion: {
      for (const Composition& s : comps()) {
        for (int n = 1; n <= opt.max_n; ++n) {
          grid.push_back(Params().set("s", s).set("n", n));
        }
      }
      break;
    }
    case IdentityId::duality_ab: {
      for (const Composition& s : comps()) {
        const auto blocks = blocks_from_composition(s);
        for (int n = 1; n <= opt.max_n; ++n) {
          grid.push_back(Params()
                             .set("a", Composition(blocks.first))
                             .set("b", Composition(blocks.second))
                             .set("n", n));
        }
      }
      break;
    }
    case IdentityId::cor_limit_ninf: {
      for (const Composition& s : comps()) {
        grid.push_back(Params()
                           .set("s", s)
                           .set("q", opt.q0)
                           .set("N", opt.truncation_terms));
      }
      break;
    }
    case IdentityId::qkarl:
    case IdentityId::an01m: {
      for (int m = 0; m <= opt.max_m; ++m) {
        for (int n = 1; n <= opt.max_n; ++n) {
          grid.push_back(Params().set("m", m).set("n", n));
        }
      }
      break;
    }
    case IdentityId::qkarl_dual:
    case IdentityId::karl:
    case IdentityId::cor_strict_q1: {
      for (int m = 1; m <= opt.max_m; ++m) {
        for (int n = 1; n <= opt.max_n; ++n) {
          grid.push_back(Params().set("m", m).set("n", n));
        }
      }
      break;
    }
    case IdentityId::george: {
      for (int n = 1; n <= opt.max_n; ++n) {
        grid.push_back(Params().set("n", n));
      }
      break;
    }
    case IdentityId::lemma_qsum: {
      for (int n = 1; n <= opt.max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
          grid.push_back(Params().set("k", k).set("n", n));
        }
      }
      break;
    }
    case IdentityId::qbinom_thm: {
      for (int n = 0; n <= opt.max_n; ++n) {
        grid.push_back(Params().set("n", n));
      }
      break;
    }
    case IdentityId::thm2_strict_ones: {
      for (int m = 0; m <= opt.max_m; ++m) {
        for (int n = 0; n <= opt.max_n; ++n) {
          grid.push_back(Params().set("m", m).set("n", n));
        }
      }
      break;
    }
    case IdentityId::cor_strict_ninf: {
      for (int m = 1; m <= opt.max_m; ++m) {
        grid.push_back(Params()
                           .set("m", m)
                           .set("q", opt.q0)
                           .set("N", opt.truncation_terms));
      }
      break;
    }
    case IdentityId::prodinger_pair: {
      grid.push_back(Params()
                         .set("seed", opt.seed)
                         .set("trials", opt.trials)
                         .set("max_n", opt.max_n));
      for (const Composition& s : comps()) {
        grid.push_back(Params().set("s", s).set("n", opt.max_n));
      }
      break;
    }
    case IdentityId::fulas: {
      grid.push_back(
          Params().set("seed", opt.seed).set("trials", opt.trials));
      break;
    }
    case IdentityId::uchimura_limit: {
      grid.push_back(
          Params().set("q", opt.q0).set("N", opt.truncation_terms));
      break;
    }
    case IdentityId::qzeta_relation: {
      for (const Composition& s : comps()) {
        if (s[0] < 2) continue;
        grid.push_back(Params()
                           .set("s", s)
                           .set("q", opt.q0)
                           .set("N", opt.truncation_terms));
      }
      break;
    }
  }
  return grid;
}

}  // namespace

std::vector<Composition> compositions_up_to_weight(int max_weight) {
  std::vector<Composition> out;
  std::vector<int> current;
  for (int w = 1; w <= max_weight; ++w) {
    compositions_of_weight(w, current, out);
  }
  return out;
}

std::vector<Report> sweep(IdentityId id, const SweepOptions& options) {
  const std::vector<Params> grid = build_grid(id, options);
  if (grid.empty()) {
    throw std::invalid_argument("sweep grid for " + identity_tag(id) +
                                " is empty with these bounds");
  }
  std::vector<Report> out(grid.size());
  const int threads = std::clamp(options.threads, 1,
                                 static_cast<int>(grid.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < grid.size(); ++i) {
      out[i] = check_identity(id, grid[i]);
    }
    return out;
  }
  std::atomic<size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= grid.size()) return;
        out[i] = check_identity(id, grid[i]);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace qharmonic
