// Copyright 2026 The owlfol Authors.
// SPDX-License-Identifier: Apache-2.0

#include "owlfol/prover/run.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#ifdef __linux__
#include <sys/prctl.h>
#endif

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace owlfol::prover {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ProverRun error_run(std::string diagnostic) {
  ProverRun r;
  r.status = SzsStatus::kError;
  r.diagnostic = std::move(diagnostic);
  return r;
}

class TempFile {
 public:
  explicit TempFile(std::string_view content) {
    std::string pattern = (temp_directory() / "owlfol-XXXXXX.p").string();
    int fd = ::mkstemps(pattern.data(), 2);
    if (fd < 0) {
      throw std::runtime_error("cannot create temp file in " +
                               temp_directory().string() + ": " +
                               std::strerror(errno));
    }
    path_ = pattern;
    std::size_t off = 0;
    while (off < content.size()) {
      ssize_t n = ::write(fd, content.data() + off, content.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        int err = errno;
        ::close(fd);
        std::filesystem::remove(path_);
        throw std::runtime_error("cannot write " + path_.string() + ": " +
                                 std::strerror(err));
      }
      off += static_cast<std::size_t>(n);
    }
    ::close(fd);
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& p, std::string_view content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

class OutputSink {
 public:
  explicit OutputSink(std::size_t cap) : cap_(cap) {}

  // Returns false at end of file.
  bool read_from(int fd, ProverRun& run) {
    char buf[8192];
    for (;;) {
      ssize_t n = ::read(fd, buf, sizeof buf);
      if (n > 0) {
        std::size_t room = cap_ > run.raw.size() ? cap_ - run.raw.size() : 0;
        std::size_t take = std::min(room, static_cast<std::size_t>(n));
        run.raw.append(buf, take);
        if (take < static_cast<std::size_t>(n)) run.truncated = true;
        continue;
      }
      if (n == 0) return false;
      if (errno == EINTR) continue;
      return true;  // EAGAIN
    }
  }

 private:
  std::size_t cap_;
};

// Orphans from a prover's process group are reparented to this process.
void become_subreaper() {
#ifdef __linux__
  static std::once_flag once;
  std::call_once(once, [] { ::prctl(PR_SET_CHILD_SUBREAPER, 1); });
#endif
}

}  // namespace

std::filesystem::path temp_directory() {
  if (const char* dir = std::getenv("OWLFOL_TMPDIR"); dir && *dir) return dir;
  return std::filesystem::temp_directory_path();
}

ProverRun run_prover(std::string_view problem_text, const ProverConfig& cfg,
                     const RunOptions& options) {
  cfg.validate();
  become_subreaper();
  if (problem_text.empty()) return error_run("empty problem");

  std::optional<TempFile> temp;
  std::filesystem::path input;
  try {
    if (options.artifact_dir) {
      std::filesystem::create_directories(*options.artifact_dir);
      input = *options.artifact_dir / "problem.p";
      write_file(input, problem_text);
    } else {
      temp.emplace(problem_text);
      input = temp->path();
    }
  } catch (const std::exception& e) {
    return error_run(e.what());
  }

  const std::string command = cfg.command_for(input);
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) {
    return error_run(std::string("pipe: ") + std::strerror(errno));
  }

  const auto start = Clock::now();
  pid_t pid = ::fork();
  if (pid < 0) {
    int err = errno;
    ::close(fds[0]);
    ::close(fds[1]);
    return error_run(std::string("fork: ") + std::strerror(err));
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    int devnull = ::open("/dev/null", O_RDONLY);
    if (devnull >= 0) ::dup2(devnull, STDIN_FILENO);
    ::dup2(fds[1], STDOUT_FILENO);
    ::dup2(fds[1], STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(fds[1]);
  const int out_fd = fds[0];
  ::fcntl(out_fd, F_SETFL, ::fcntl(out_fd, F_GETFL) | O_NONBLOCK);

  ProverRun run;
  OutputSink sink(cfg.output_cap);
  bool pipe_open = true;
  const auto deadline = start + std::chrono::seconds(cfg.timeout_s);
  const auto grace = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(kKillGraceS));
  std::optional<Clock::time_point> kill_at;

  // True once the leader has exited; the leader itself stays unreaped.
  auto leader_exited = [&] {
    siginfo_t info{};
    return ::waitid(P_PID, static_cast<id_t>(pid), &info,
                    WEXITED | WNOHANG | WNOWAIT) == 0 &&
           info.si_pid == pid;
  };

  while (!leader_exited()) {
    const auto now = Clock::now();
    if (!run.timed_out && now >= deadline) {
      run.timed_out = true;
      ::killpg(pid, SIGTERM);
      kill_at = now + grace;
    }
    if (kill_at && now >= *kill_at) {
      ::killpg(pid, SIGKILL);
      kill_at.reset();
    }
    if (pipe_open) {
      struct pollfd p{out_fd, POLLIN, 0};
      if (::poll(&p, 1, 20) > 0) pipe_open = sink.read_from(out_fd, run);
    } else {
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  }
  ::killpg(pid, SIGKILL);
  int wstatus = 0;
  while (::waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {
  }
  // Reap the rest of the group; waitpid fails with ECHILD once none is left.
  for (int status = 0; ::waitpid(-pid, &status, 0) > 0 || errno == EINTR;) {
  }
  run.elapsed_s = seconds_since(start);
  const auto drain_until = Clock::now() + std::chrono::milliseconds(500);
  while (pipe_open && Clock::now() < drain_until) {
    struct pollfd p{out_fd, POLLIN, 0};
    if (::poll(&p, 1, 20) > 0) pipe_open = sink.read_from(out_fd, run);
  }
  ::close(out_fd);

  if (WIFEXITED(wstatus)) run.exit_code = WEXITSTATUS(wstatus);

  if (options.artifact_dir) {
    try {
      write_file(*options.artifact_dir / "output.txt", run.raw);
    } catch (const std::exception&) {
      // Best effort.
    }
  }

  if (run.timed_out) {
    run.status = SzsStatus::kTimeout;
    return run;
  }
  run.status = parse_szs_status(run.raw);
  if (run.status == SzsStatus::kUnknown && run.exit_code &&
      (*run.exit_code == 126 || *run.exit_code == 127)) {
    run.status = SzsStatus::kError;
    run.diagnostic = "cannot execute prover command: " + command;
  }
  return run;
}

}  // namespace owlfol::prover
