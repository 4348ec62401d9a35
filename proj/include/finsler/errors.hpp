#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

enum class Errc {
  Domain,
  OrderUnsupported,
  SingularJacobian,
  Parse,
  UnknownIdentifier,
  IndexOutOfRange,
  YDependentSigma,
  DegenerateMetric,
  NotAdmissible,
  NullDirection,
  SamplingExhausted,
  GridTooCoarse,
  NotNull,
  FlowBlowup,
  AllSamplesNull,
  Config,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(Errc::Domain, m) {}
};

struct OrderUnsupported : Error {
  explicit OrderUnsupported(const std::string& m) : Error(Errc::OrderUnsupported, m) {}
};

struct SingularJacobian : Error {
  explicit SingularJacobian(const std::string& m) : Error(Errc::SingularJacobian, m) {}
};

// Carries the byte offset of the failure plus what was found/expected there.
struct ParseError : Error {
  ParseError(std::size_t off, const std::string& fnd, const std::string& exp)
      : Error(Errc::Parse, "parse error at offset " + std::to_string(off) + ": found " + fnd +
                               ", expected " + exp),
        offset(off),
        found(fnd),
        expected(exp) {}
  std::size_t offset;
  std::string found;
  std::string expected;
};

struct UnknownIdentifier : Error {
  UnknownIdentifier(std::size_t off, const std::string& name)
      : Error(Errc::UnknownIdentifier, "unknown identifier '" + name + "' at offset " + std::to_string(off)),
        offset(off) {}
  std::size_t offset;
};

struct IndexOutOfRange : Error {
  IndexOutOfRange(std::size_t off, const std::string& name, int dim)
      : Error(Errc::IndexOutOfRange, "variable '" + name + "' out of range for dimension " +
                                         std::to_string(dim) + " at offset " + std::to_string(off)),
        offset(off) {}
  std::size_t offset;
};

struct YDependentSigma : Error {
  explicit YDependentSigma(const std::string& m) : Error(Errc::YDependentSigma, m) {}
};

struct DegenerateMetric : Error {
  explicit DegenerateMetric(const std::string& m) : Error(Errc::DegenerateMetric, m) {}
};

struct NotAdmissible : Error {
  explicit NotAdmissible(const std::string& m) : Error(Errc::NotAdmissible, m) {}
};

struct NullDirection : Error {
  explicit NullDirection(const std::string& m) : Error(Errc::NullDirection, m) {}
};

struct SamplingExhausted : Error {
  explicit SamplingExhausted(const std::string& m) : Error(Errc::SamplingExhausted, m) {}
};

struct GridTooCoarse : Error {
  explicit GridTooCoarse(const std::string& m) : Error(Errc::GridTooCoarse, m) {}
};

struct NotNull : Error {
  explicit NotNull(const std::string& m) : Error(Errc::NotNull, m) {}
};

struct FlowBlowup : Error {
  explicit FlowBlowup(const std::string& m) : Error(Errc::FlowBlowup, m) {}
};

struct AllSamplesNull : Error {
  explicit AllSamplesNull(const std::string& m) : Error(Errc::AllSamplesNull, m) {}
};

// Configuration problems carry the offending field path ("probe[2].metric").
struct ConfigError : Error {
  ConfigError(const std::string& path, const std::string& m)
      : Error(Errc::Config, path.empty() ? m : path + ": " + m), field_path(path) {}
  std::string field_path;
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error(Errc::Io, m) {}
};

}  // namespace finsler
