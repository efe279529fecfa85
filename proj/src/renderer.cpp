#include "kgatlas/renderer.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstdlib>
#include <utility>
#include <vector>

namespace kgatlas::render {

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  if (name == "svg") return OutputFormat::svg;
  if (name == "png") return OutputFormat::png;
  if (name == "pdf") return OutputFormat::pdf;
  return std::nullopt;
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::svg: return "svg";
    case OutputFormat::png: return "png";
    case OutputFormat::pdf: return "pdf";
  }
  return "svg";
}

std::string_view content_type(OutputFormat format) {
  switch (format) {
    case OutputFormat::svg: return "image/svg+xml";
    case OutputFormat::png: return "image/png";
    case OutputFormat::pdf: return "application/pdf";
  }
  return "application/octet-stream";
}

namespace {

bool is_executable(const std::filesystem::path& p) {
  std::error_code ec;
  return std::filesystem::is_regular_file(p, ec) && ::access(p.c_str(), X_OK) == 0;
}

// Owns a file descriptor.
class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  Fd(Fd&& o) noexcept : fd_(std::exchange(o.fd_, -1)) {}
  Fd& operator=(Fd&& o) noexcept {
    reset(std::exchange(o.fd_, -1));
    return *this;
  }
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { reset(); }

  int get() const { return fd_; }
  void reset(int fd = -1) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = fd;
  }

 private:
  int fd_;
};

std::array<Fd, 2> make_pipe() {
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) throw RendererUnavailable("cannot create pipe");
  return {Fd(fds[0]), Fd(fds[1])};
}

}  // namespace

std::optional<std::filesystem::path> find_engine(std::string_view engine,
                                                 const RendererConfig& config) {
  if (config.directory) {
    auto candidate = *config.directory / std::string(engine);
    if (is_executable(candidate)) return candidate;
    return std::nullopt;
  }
  const char* path_env = std::getenv("PATH");
  if (!path_env) return std::nullopt;
  std::string_view rest(path_env);
  while (!rest.empty()) {
    auto colon = rest.find(':');
    std::string_view dir = rest.substr(0, colon);
    rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    if (dir.empty()) continue;
    auto candidate = std::filesystem::path(std::string(dir)) / std::string(engine);
    if (is_executable(candidate)) return candidate;
  }
  return std::nullopt;
}

std::string render(const dot::DotDocument& doc, OutputFormat format,
                   const RendererConfig& config) {
  auto exe = find_engine(doc.engine, config);
  if (!exe) throw RendererUnavailable("layout engine '" + doc.engine + "' not found");

  // an engine that exits early must not take the process down with SIGPIPE
  static const bool sigpipe_ignored = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;

  auto [in_read, in_write] = make_pipe();
  auto [out_read, out_write] = make_pipe();
  const std::string flag = "-T" + std::string(to_string(format));
  const std::string program = exe->string();

  const pid_t pid = ::fork();
  if (pid < 0) throw RendererUnavailable("cannot start layout engine");
  if (pid == 0) {
    ::dup2(in_read.get(), STDIN_FILENO);
    ::dup2(out_write.get(), STDOUT_FILENO);
    int devnull = ::open("/dev/null", O_WRONLY);
    if (devnull >= 0) ::dup2(devnull, STDERR_FILENO);
    char* argv[] = {const_cast<char*>(program.c_str()), const_cast<char*>(flag.c_str()),
                    nullptr};
    ::execv(program.c_str(), argv);
    ::_exit(127);
  }
  in_read.reset();
  out_write.reset();

  // Feed stdin and drain stdout together so neither side can block.
  std::string output;
  std::size_t written = 0;
  std::array<char, 8192> buf;
  ::fcntl(in_write.get(), F_SETFL, O_NONBLOCK);
  if (doc.text.empty()) in_write.reset();
  while (out_read.get() >= 0) {
    std::vector<pollfd> fds;
    fds.push_back({out_read.get(), POLLIN, 0});
    if (in_write.get() >= 0) fds.push_back({in_write.get(), POLLOUT, 0});
    if (::poll(fds.data(), fds.size(), -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (fds.size() > 1 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t n = ::write(in_write.get(), doc.text.data() + written, doc.text.size() - written);
      if (n > 0) written += static_cast<std::size_t>(n);
      if (n < 0 && errno != EAGAIN && errno != EINTR) {
        in_write.reset();
      } else if (written == doc.text.size()) {
        in_write.reset();
      }
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      ssize_t n = ::read(out_read.get(), buf.data(), buf.size());
      if (n > 0) {
        output.append(buf.data(), static_cast<std::size_t>(n));
      } else if (n == 0 || (errno != EAGAIN && errno != EINTR)) {
        out_read.reset();
      }
    }
  }
  in_write.reset();

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw RendererUnavailable("layout engine '" + doc.engine + "' failed");
  }
  return output;
}

}  // namespace kgatlas::render
