#ifndef REARR_ERROR_HPP
#define REARR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rearr {

/// Error categories. The CLI maps them to exit codes: configuration-type
/// errors (config, parse, invalid_index, range) exit with 1, numerical
/// errors (evaluation, insufficient_samples) exit with 2.
enum class errc {
    invalid_index,
    config,
    parse,
    evaluation,
    insufficient_samples,
    range,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }

    bool numerical() const {
        return code_ == errc::evaluation || code_ == errc::insufficient_samples;
    }

  private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_index: return "invalid-index";
        case errc::config: return "config";
        case errc::parse: return "parse";
        case errc::evaluation: return "evaluation";
        case errc::insufficient_samples: return "insufficient-samples";
        case errc::range: return "range";
    }
    return "unknown";
}

} // namespace rearr

#endif
