#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "qhaar/haar.hpp"
#include "qhaar/hecke.hpp"

namespace qhaar {

struct SymmetryCache {
  std::mutex mutex;
  std::map<int, std::shared_ptr<Rep>> reps;
  std::map<int, std::shared_ptr<IntegralTensor>> integrals;
  std::map<int, std::shared_ptr<SMatrix>> p_ops;
  struct Calibration {
    Scalar gamma;
    bool consistent = false;
  };
  std::optional<Calibration> calibration;
};

namespace detail {

inline SymmetryCache& cache_of(const HeckeSymmetry& sym) {
  if (!sym.cache) sym.cache = std::make_shared<SymmetryCache>();
  return *sym.cache;
}

}  // namespace detail
}  // namespace qhaar
