#include "tad/effects.hpp"

#include <ucontext.h>

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace tad::effects {

namespace detail {

/// Thrown (as a type deliberately outside the std::exception hierarchy) into
/// a suspended computation that is being abandoned, so its stack unwinds and
/// destructors run before the fiber is reclaimed.
struct CancelUnwind {};

/// One handled computation: a stackful fiber for the body plus the slots
/// through which body and handler exchange payloads, replies, and results.
///
/// The body runs on the fiber; handler branches always run on the host side
/// (whatever stack entered the fiber), so effects performed *by handler
/// code* belong to the enclosing computation, not the handled one.
struct Scope {
  enum class Status : unsigned char {
    created,
    running,
    suspended,  // parked inside perform(), waiting for a reply
    finished,   // body returned; result captured
    threw,      // body raised; exception captured
    dead,       // fully consumed or unwound
  };

  std::function<std::any()> body;
  Handler handler;

  ucontext_t fiber_ctx{};
  ucontext_t host_ctx{};
  std::vector<unsigned char> stack;

  Status status = Status::created;
  bool cancelling = false;

  std::any pending_payload;  // body -> handler, valid while suspended
  std::any reply;            // handler -> body, consumed on re-entry
  std::any body_result;      // body -> handler, valid when finished
  std::exception_ptr body_exception;

  std::uint64_t next_token = 1;
  std::uint64_t pending_token = 0;  // nonzero while one continuation is live

  ~Scope();
};

/// The runtime's private window into Continuation.
struct ContinuationAccess {
  static Continuation make(std::shared_ptr<Scope> s, std::uint64_t token) {
    return Continuation(std::move(s), token);
  }
  static const std::shared_ptr<Scope>& scope(const Continuation& k) {
    return k.scope_;
  }
};

namespace {

constexpr std::size_t kFiberStackBytes = 1u << 20;

thread_local Scope* t_current = nullptr;  // scope of the running fiber
thread_local Stats t_stats{};

/// Outermost frame of every fiber. No exception may escape it: the body's
/// outcome is captured into the scope and control always swaps back to the
/// host.
void fiber_main() {
  Scope* s = t_current;
  try {
    s->body_result = s->body();
    s->status = Scope::Status::finished;
  } catch (const CancelUnwind&) {
    s->status = Scope::Status::dead;
  } catch (...) {
    s->body_exception = std::current_exception();
    s->status = Scope::Status::threw;
  }
  swapcontext(&s->fiber_ctx, &s->host_ctx);
}

/// Transfer control into the scope's fiber until it suspends, finishes, or
/// throws. Saves the current position as the fiber's host, so suspension
/// lands right back here no matter which stack called.
void enter(Scope& s) {
  Scope* prev = t_current;
  t_current = &s;
  s.status = Scope::Status::running;
  swapcontext(&s.host_ctx, &s.fiber_ctx);
  t_current = prev;
}

/// Host-side dispatch after the fiber yielded control: hand an effect to the
/// handler, hand a result to the return branch, or re-raise the body's
/// exception. Runs on the host stack, so anything the handler performs
/// reaches the *enclosing* computation's handler.
std::any pump(const std::shared_ptr<Scope>& s) {
  enter(*s);
  switch (s->status) {
    case Scope::Status::suspended: {
      Continuation k =
          ContinuationAccess::make(s, s->pending_token);
      return s->handler.on_effect(std::move(s->pending_payload),
                                  std::move(k));
    }
    case Scope::Status::finished: {
      s->status = Scope::Status::dead;
      ++t_stats.returns;
      return s->handler.on_return(std::move(s->body_result));
    }
    case Scope::Status::threw: {
      s->status = Scope::Status::dead;
      std::rethrow_exception(std::exchange(s->body_exception, nullptr));
    }
    default:
      throw ContractViolation("handled computation yielded in a bad state");
  }
}

}  // namespace

Scope::~Scope() {
  if (status == Status::suspended) {
    // Abandoned while parked: unwind the fiber so the body's destructors
    // run, then let the stack storage go.
    cancelling = true;
    enter(*this);
  }
}

}  // namespace detail

bool Continuation::consumed() const noexcept {
  return !scope_ ||
         scope_->status != detail::Scope::Status::suspended ||
         scope_->pending_token != token_;
}

std::any handle(std::function<std::any()> body, Handler handler) {
  if (!body || !handler.on_effect || !handler.on_return) {
    throw ContractViolation("handle() needs a body and a complete handler");
  }
  ++detail::t_stats.handles;

  auto s = std::make_shared<detail::Scope>();
  s->body = std::move(body);
  s->handler = std::move(handler);
  s->stack.resize(detail::kFiberStackBytes);
  if (getcontext(&s->fiber_ctx) != 0) {
    throw ContractViolation("could not capture a fiber context");
  }
  s->fiber_ctx.uc_stack.ss_sp = s->stack.data();
  s->fiber_ctx.uc_stack.ss_size = s->stack.size();
  s->fiber_ctx.uc_link = nullptr;
  makecontext(&s->fiber_ctx, &detail::fiber_main, 0);

  return detail::pump(s);
}

std::any perform(std::any payload) {
  ++detail::t_stats.performs;
  detail::Scope* s = detail::t_current;
  if (s == nullptr) {
    throw UnhandledEffect("effect performed outside any handled computation");
  }
  s->pending_payload = std::move(payload);
  s->pending_token = s->next_token++;
  s->status = detail::Scope::Status::suspended;
  swapcontext(&s->fiber_ctx, &s->host_ctx);
  if (s->cancelling) {
    throw detail::CancelUnwind{};
  }
  return std::move(s->reply);
}

std::any resume(const Continuation& k, std::any reply) {
  const std::shared_ptr<detail::Scope>& s =
      detail::ContinuationAccess::scope(k);
  if (k.consumed()) {
    throw ContinuationConsumed(
        "continuation resumed twice (or after its computation ended)");
  }
  ++detail::t_stats.resumes;
  s->reply = std::move(reply);
  s->pending_token = 0;  // the one shot is spent
  return detail::pump(s);
}

Stats stats() noexcept { return detail::t_stats; }

std::vector<std::string> ask_demo() {
  std::vector<std::string> lines;

  Handler narrator;
  narrator.on_effect = [&lines](std::any payload, Continuation k) -> std::any {
    const int n = std::any_cast<int>(payload);
    lines.push_back("I am queried at " + std::to_string(n) + "...");
    std::any downstream = resume(k, n + 1);
    lines.push_back("Earlier, I have been queried at " + std::to_string(n) +
                    "...");
    return downstream;
  };
  narrator.on_return = [&lines](std::any result) -> std::any {
    lines.push_back("The client has finished with result " +
                    std::to_string(std::any_cast<int>(result)));
    return result;
  };

  handle(
      []() -> std::any {
        const int first = std::any_cast<int>(perform(7));
        const int second = std::any_cast<int>(perform(2));
        return first + second;
      },
      narrator);

  return lines;
}

}  // namespace tad::effects
