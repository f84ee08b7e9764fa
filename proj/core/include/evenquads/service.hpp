#pragma once

#include "evenquads/cap.hpp"
#include "evenquads/io.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace evenquads {

inline constexpr int kMinSessionDim = 4;
inline constexpr int kMaxSessionDim = 8;

class SessionNotFound : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// In-memory cap-building sessions. Sessions are independent; mutations of
/// one session are serialized and never overlap its reads.
///
/// Board documents carry the selected points, every exclude with its
/// multiplicity and witness triples, the dimension, the class label (k <= 9),
/// the closure flags and the closed-form count Q(k, n) for the current size.
class SessionStore {
public:
  explicit SessionStore(std::uint64_t seed = std::random_device{}());

  /// New session in Z_2^n, optionally starting from a saved cap.
  /// Throws std::invalid_argument unless 4 <= n <= 8.
  Json create(int n);
  Json create(const Cap& start);

  [[nodiscard]] Json board(const std::string& id) const;

  /// {"accepted": bool, "board": ...}; an excluded point is refused with
  /// "rejection": {"point", "multiplicity", "triples"} and no state change.
  Json toggle(const std::string& id, const Point& p);
  /// {"undone": bool, "board": ...}; undoing an empty history is a no-op.
  Json undo(const std::string& id);
  /// Clears the selection and the history.
  Json reset(const std::string& id);

  /// The selected cap in cap-file form.
  [[nodiscard]] std::string snapshot(const std::string& id) const;
  [[nodiscard]] int dimension_of(const std::string& id) const;
  [[nodiscard]] std::size_t size() const;

private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id) const;
  std::string fresh_id();

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 rng_;
};

struct Response {
  int status = 200;
  Json body;
};

/// Routes structured requests onto a SessionStore:
///   POST /sessions {n[, points]}      GET /sessions/{id}
///   POST /sessions/{id}/toggle {point} POST /sessions/{id}/undo
///   POST /sessions/{id}/reset         GET /sessions/{id}/snapshot
///   GET /meta/census?n=&k=            GET /meta/probability?n=
/// Errors come back as {"error": message} with 400, 404 or 405.
class Service {
public:
  explicit Service(std::uint64_t seed = std::random_device{}()) : store_(seed) {}

  Response handle(const std::string& method, const std::string& path,
                  const std::map<std::string, std::string>& query, const std::string& body);

  [[nodiscard]] SessionStore& store() { return store_; }

private:
  SessionStore store_;
};

} // namespace evenquads
