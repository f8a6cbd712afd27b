#ifndef LMD_LOG_MODEL_HPP
#define LMD_LOG_MODEL_HPP

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lmd/error.hpp"
#include "lmd/io.hpp"

namespace lmd {

// The corpus marks missing fields with a literal '?'.
inline constexpr std::string_view kMissing = "?";

inline bool is_missing(std::string_view s) { return s == kMissing; }

enum class Outcome : uint8_t { kSuccess, kFail };
enum class ProcPhase : uint8_t { kStart, kEnd };

// One authentication record: 9 comma-separated fields, user@domain tokens
// split on the first '@'. Domains are absent on bare machine-account tokens.
struct AuthEvent {
  int64_t time = 0;
  std::string src_user;
  std::optional<std::string> src_domain;
  std::string dst_user;
  std::optional<std::string> dst_domain;
  std::string src_computer;
  std::string dst_computer;
  std::string auth_type;   // may be "?"
  std::string logon_type;  // may be "?"
  std::string orientation; // LogOn, LogOff, TGT, TGS, AuthMap, ...; never "?"
  Outcome outcome = Outcome::kSuccess;

  bool operator==(const AuthEvent&) const = default;
};

struct ProcEvent {
  int64_t time = 0;
  std::string user;
  std::optional<std::string> domain;
  std::string computer;
  std::string process_name;
  ProcPhase phase = ProcPhase::kStart;

  bool operator==(const ProcEvent&) const = default;
};

struct RedTeamEvent {
  int64_t time = 0;
  std::string user;
  std::string domain;
  std::string src_computer;
  std::string dst_computer;

  bool operator==(const RedTeamEvent&) const = default;
};

namespace detail {

// Splits into exactly `N` comma fields; wrong count is corrupt input.
template <size_t N>
inline std::array<std::string_view, N> split_fields(std::string_view line) {
  std::array<std::string_view, N> out;
  size_t start = 0;
  for (size_t i = 0; i + 1 < N; ++i) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos)
      throw MalformedLine("expected " + std::to_string(N) + " fields: " + std::string(line));
    out[i] = line.substr(start, comma - start);
    start = comma + 1;
  }
  std::string_view last = line.substr(start);
  if (last.find(',') != std::string_view::npos)
    throw MalformedLine("expected " + std::to_string(N) + " fields: " + std::string(line));
  out[N - 1] = last;
  return out;
}

inline int64_t parse_time(std::string_view s, std::string_view line) {
  int64_t t = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
  if (ec != std::errc() || ptr != s.data() + s.size() || t < 0)
    throw MalformedLine("bad time field: " + std::string(line));
  return t;
}

struct UserDomain {
  std::string_view user;
  std::optional<std::string_view> domain;
};

inline UserDomain split_user_domain(std::string_view tok) {
  size_t at = tok.find('@');
  if (at == std::string_view::npos) return {tok, std::nullopt};
  return {tok.substr(0, at), tok.substr(at + 1)};
}

inline void append_user_domain(std::string& out, std::string_view user,
                               const std::optional<std::string>& domain) {
  out.append(user);
  if (domain) {
    out.push_back('@');
    out.append(*domain);
  }
}

}  // namespace detail

// --- authentication lines ---------------------------------------------------

inline AuthEvent parse_auth_line(std::string_view line) {
  auto f = detail::split_fields<9>(line);
  AuthEvent e;
  e.time = detail::parse_time(f[0], line);
  auto src = detail::split_user_domain(f[1]);
  auto dst = detail::split_user_domain(f[2]);
  e.src_user = std::string(src.user);
  if (src.domain) e.src_domain = std::string(*src.domain);
  e.dst_user = std::string(dst.user);
  if (dst.domain) e.dst_domain = std::string(*dst.domain);
  e.src_computer = std::string(f[3]);
  e.dst_computer = std::string(f[4]);
  e.auth_type = std::string(f[5]);
  e.logon_type = std::string(f[6]);
  e.orientation = std::string(f[7]);
  if (e.orientation.empty() || is_missing(e.orientation))
    throw MalformedLine("bad orientation: " + std::string(line));
  if (f[8] == "Success")
    e.outcome = Outcome::kSuccess;
  else if (f[8] == "Fail")
    e.outcome = Outcome::kFail;
  else
    throw MalformedLine("unknown outcome token: " + std::string(line));
  return e;
}

inline std::string serialize_auth(const AuthEvent& e) {
  std::string out;
  out.reserve(96);
  out += std::to_string(e.time);
  out.push_back(',');
  detail::append_user_domain(out, e.src_user, e.src_domain);
  out.push_back(',');
  detail::append_user_domain(out, e.dst_user, e.dst_domain);
  out.push_back(',');
  out += e.src_computer;
  out.push_back(',');
  out += e.dst_computer;
  out.push_back(',');
  out += e.auth_type;
  out.push_back(',');
  out += e.logon_type;
  out.push_back(',');
  out += e.orientation;
  out.push_back(',');
  out += e.outcome == Outcome::kSuccess ? "Success" : "Fail";
  return out;
}

// --- process lines -----------------------------------------------------------

inline ProcEvent parse_proc_line(std::string_view line) {
  auto f = detail::split_fields<5>(line);
  ProcEvent e;
  e.time = detail::parse_time(f[0], line);
  auto ud = detail::split_user_domain(f[1]);
  e.user = std::string(ud.user);
  if (ud.domain) e.domain = std::string(*ud.domain);
  e.computer = std::string(f[2]);
  e.process_name = std::string(f[3]);
  if (f[4] == "Start")
    e.phase = ProcPhase::kStart;
  else if (f[4] == "End")
    e.phase = ProcPhase::kEnd;
  else
    throw MalformedLine("unknown phase token: " + std::string(line));
  return e;
}

inline std::string serialize_proc(const ProcEvent& e) {
  std::string out;
  out.reserve(48);
  out += std::to_string(e.time);
  out.push_back(',');
  detail::append_user_domain(out, e.user, e.domain);
  out.push_back(',');
  out += e.computer;
  out.push_back(',');
  out += e.process_name;
  out.push_back(',');
  out += e.phase == ProcPhase::kStart ? "Start" : "End";
  return out;
}

// --- red-team label lines ----------------------------------------------------

inline RedTeamEvent parse_redteam_line(std::string_view line) {
  auto f = detail::split_fields<4>(line);
  RedTeamEvent e;
  e.time = detail::parse_time(f[0], line);
  auto ud = detail::split_user_domain(f[1]);
  if (!ud.domain) throw MalformedLine("user field lacks '@': " + std::string(line));
  e.user = std::string(ud.user);
  e.domain = std::string(*ud.domain);
  e.src_computer = std::string(f[2]);
  e.dst_computer = std::string(f[3]);
  for (const auto* field : {&e.user, &e.domain, &e.src_computer, &e.dst_computer}) {
    if (field->empty() || is_missing(*field))
      throw MalformedLine("missing field in red-team record: " + std::string(line));
  }
  return e;
}

inline std::string serialize_redteam(const RedTeamEvent& e) {
  std::string out;
  out.reserve(48);
  out += std::to_string(e.time);
  out.push_back(',');
  out += e.user;
  out.push_back('@');
  out += e.domain;
  out.push_back(',');
  out += e.src_computer;
  out.push_back(',');
  out += e.dst_computer;
  return out;
}

// --- strictness-aware file readers -------------------------------------------

// Skip-and-count is the default posture for stray lines in real corpora;
// strict mode aborts on the first MalformedLine.
struct ParseReport {
  uint64_t parsed = 0;
  uint64_t skipped = 0;
  std::string first_error;
};

template <typename Record, typename ParseFn, typename Sink>
inline ParseReport read_log_file(const std::filesystem::path& path, ParseFn parse, bool strict,
                                 Sink&& sink) {
  LineReader reader(path);
  ParseReport report;
  std::string line;
  while (reader.next(line)) {
    try {
      Record rec = parse(line);
      ++report.parsed;
      sink(std::move(rec));
    } catch (const MalformedLine& err) {
      if (strict)
        throw MalformedLine(path.string() + ":" + std::to_string(reader.line_number()) + ": " +
                            err.what());
      ++report.skipped;
      if (report.first_error.empty()) report.first_error = err.what();
    }
  }
  return report;
}

}  // namespace lmd

#endif  // LMD_LOG_MODEL_HPP
