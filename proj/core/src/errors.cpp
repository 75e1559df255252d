#include "lrdipole/errors.hpp"

namespace lrdipole {

Error::Error(const std::string& message)
  : std::runtime_error(message), message_(message)
{
}

const char* Error::what() const noexcept
{
  return message_.c_str();
}

void Error::add_context(const std::string& context)
{
  message_ = context + ": " + message_;
}

} // namespace lrdipole
