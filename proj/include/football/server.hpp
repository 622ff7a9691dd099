#pragma once

#include <chrono>
#include <deque>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include "football/env.hpp"
#include "football/replay.hpp"
#include "football/wire.hpp"

namespace football {

struct ServeConfig {
  std::string address = "0.0.0.0";
  int port = 8080;  // 0 picks a free port
  std::string scenario = "11_vs_11_stochastic";
  std::optional<Side> human_side;
  std::optional<std::string> replay_path;
  std::string static_dir;  // empty: built-in page
  std::uint64_t seed = 0;
  double fps = 10.0;
};

// Game state behind the viewer: a live match (optionally with one human
// player) or a replay with pause, seek and speed control.
class GameSession {
 public:
  static constexpr int kSnapshotInterval = 100;
  static constexpr double kMinSpeed = 0.5;
  static constexpr double kMaxSpeed = 4.0;

  explicit GameSession(const ServeConfig& config) : human_(config.human_side) {
    if (config.replay_path) {
      replay_ = load_replay(*config.replay_path);
      ScenarioConfig scenario = parse_scenario(replay_->scenario_text);
      env_.emplace(scenario, EnvOptions{});
      env_->set_kickoff_side(replay_->kickoff);
      env_->reset_episode(replay_->episode_seed);
      human_.reset();
      build_snapshots();
      return;
    }
    ScenarioConfig scenario = load_scenario(config.scenario);
    scenario.controlled_left = human_ == Side::Left ? 1 : 0;
    scenario.controlled_right = human_ == Side::Right ? 1 : 0;
    EnvOptions options;
    options.seed = config.seed;
    env_.emplace(scenario, options);
    env_->reset();
  }

  [[nodiscard]] bool is_replay() const { return replay_.has_value(); }
  [[nodiscard]] bool paused() const { return paused_; }
  [[nodiscard]] double speed() const { return speed_; }
  [[nodiscard]] const GameState& state() const { return env_->state(); }
  [[nodiscard]] int frames() const {
    return replay_ ? static_cast<int>(replay_->frames.size()) : env_->config().duration_frames;
  }

  [[nodiscard]] wire::json config_message() const {
    return wire::config_message(env_->config(), human_, is_replay(), frames());
  }
  [[nodiscard]] wire::json state_message() const { return wire::state_message(env_->state()); }

  // Applies a client message. Returns a reply for the sender only (errors).
  std::optional<wire::json> handle(std::string_view text) {
    wire::ClientMsg msg;
    try {
      msg = wire::parse_client_message(text);
    } catch (const wire::ProtocolError& e) {
      return wire::error_message(e.what());
    }
    if (const auto* in = std::get_if<wire::InputMsg>(&msg)) {
      if (!human_) return wire::error_message("no human player in this session");
      if (const auto a = wire::input_action(*in)) pending_.push_back(*a);
      return std::nullopt;
    }
    const auto& ctl = std::get<wire::ControlMsg>(msg);
    switch (ctl.cmd) {
      case wire::ControlMsg::Cmd::Pause:
        paused_ = true;
        break;
      case wire::ControlMsg::Cmd::Resume:
        paused_ = false;
        break;
      case wire::ControlMsg::Cmd::Speed:
        speed_ = std::clamp(ctl.speed, kMinSpeed, kMaxSpeed);
        break;
      case wire::ControlMsg::Cmd::Seek:
        if (!replay_) return wire::error_message("seek is only available for replays");
        seek(ctl.frame);
        break;
    }
    return std::nullopt;
  }

  // Advances one frame unless paused; returns true when the state changed.
  bool advance() {
    if (paused_) return false;
    if (replay_) {
      if (cursor_ >= replay_->frames.size()) return false;
      apply_replay_frame(cursor_++);
      return true;
    }
    if (env_->done()) env_->reset();
    if (human_) {
      Action a = Action::Idle;
      if (!pending_.empty()) {
        a = pending_.front();
        pending_.pop_front();
      }
      // Inputs are screen directions; the environment expects the side's own frame.
      const std::array<Action, 1> acts{action_for_side(*human_, a)};
      env_->step(acts);
    } else {
      env_->step(std::span<const Action>{});
    }
    return true;
  }

  void seek(int frame) {
    const int target = std::clamp(frame, 0, frames());
    const auto snap = static_cast<std::size_t>(target / kSnapshotInterval);
    env_ = snapshots_[snap];
    cursor_ = snap * kSnapshotInterval;
    while (cursor_ < static_cast<std::size_t>(target)) apply_replay_frame(cursor_++);
  }

 private:
  void apply_replay_frame(std::size_t i) {
    const auto& f = replay_->frames[i];
    if (replay_->mode == ReplayMode::Full) {
      JointAction joint{};
      std::copy(f.actions.begin(), f.actions.end(), joint.begin());
      env_->step_all(joint);
    } else if (replay_->opponent_players > 0) {
      env_->step(f.actions, f.opponent);
    } else {
      env_->step(f.actions);
    }
  }

  void build_snapshots() {
    snapshots_.push_back(*env_);
    for (std::size_t i = 0; i < replay_->frames.size(); ++i) {
      apply_replay_frame(i);
      if ((i + 1) % kSnapshotInterval == 0) snapshots_.push_back(*env_);
    }
    env_ = snapshots_.front();
    cursor_ = 0;
  }

  std::optional<Side> human_;
  std::optional<Environment> env_;
  std::optional<Replay> replay_;
  std::vector<Environment> snapshots_;
  std::size_t cursor_ = 0;
  std::deque<Action> pending_;
  bool paused_ = false;
  double speed_ = 1.0;
};

inline constexpr std::string_view kIndexPage = R"html(<!doctype html>
<html><head><meta charset="utf-8"><title>football</title>
<style>body{background:#111;color:#ddd;font-family:monospace}canvas{background:#2a6e2a}</style></head>
<body><div id="info">connecting</div><canvas id="c" width="960" height="404"></canvas>
<script>
const c = document.getElementById('c'), g = c.getContext('2d'), info = document.getElementById('info');
const ws = new WebSocket('ws://' + location.host + '/ws');
const X = x => (x + 1.05) / 2.1 * c.width, Y = y => (y + 0.44) / 0.88 * c.height;
const keys = {ArrowLeft:'Left',ArrowRight:'Right',ArrowUp:'Top',ArrowDown:'Bottom',
  KeyS:'ShortPass',KeyA:'LongPass',KeyW:'HighPass',KeyD:'Shot',ShiftLeft:'Sprint',KeyE:'Dribble',KeyQ:'Sliding'};
let cfg = {};
ws.onmessage = ev => {
  const m = JSON.parse(ev.data);
  if (m.t === 'config') cfg = m;
  if (m.t === 'error') info.textContent = m.message;
  if (m.t !== 'state') return;
  info.textContent = `${cfg.scenario} frame ${m.frame} ${m.score[0]}-${m.score[1]} ${m.mode}`;
  g.clearRect(0, 0, c.width, c.height);
  g.strokeStyle = '#fff'; g.strokeRect(X(-1), Y(-0.42), X(1) - X(-1), Y(0.42) - Y(-0.42));
  g.beginPath(); g.moveTo(X(0), Y(-0.42)); g.lineTo(X(0), Y(0.42)); g.stroke();
  for (const p of m.players) {
    g.fillStyle = p.s === 'left' ? '#ffd700' : '#4aa3ff';
    g.beginPath(); g.arc(X(p.p[0]), Y(p.p[1]), p.a ? 7 : 5, 0, 7); g.fill();
  }
  g.fillStyle = '#fff'; g.beginPath(); g.arc(X(m.ball[0]), Y(m.ball[1]), 3 + m.ball[2] * 40, 0, 7); g.fill();
};
const send = (code, press) => { if (keys[code]) ws.send(JSON.stringify({t:'input', action:keys[code], press})); };
addEventListener('keydown', e => { if (!e.repeat) send(e.code, true); });
addEventListener('keyup', e => send(e.code, false));
</script></body></html>
)html";

namespace serve_detail {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace asio = boost::asio;
using tcp = asio::ip::tcp;

inline std::string_view mime_type(const std::filesystem::path& p) {
  const auto ext = p.extension().string();
  if (ext == ".html" || ext == ".htm") return "text/html";
  if (ext == ".js" || ext == ".mjs") return "application/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json") return "application/json";
  if (ext == ".png") return "image/png";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".wasm") return "application/wasm";
  return "application/octet-stream";
}

class Hub;

class WsSession : public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket socket, Hub& hub) : ws_(std::move(socket)), hub_(hub) {}

  void run(http::request<http::string_body> req);
  void send(std::shared_ptr<const std::string> text) {
    queue_.push_back(std::move(text));
    if (queue_.size() == 1) write_next();
  }

 private:
  void read();
  void write_next() {
    ws_.text(true);
    ws_.async_write(asio::buffer(*queue_.front()), [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) return;
      self->queue_.pop_front();
      if (!self->queue_.empty()) self->write_next();
    });
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  std::deque<std::shared_ptr<const std::string>> queue_;
  Hub& hub_;
};

// Owns the session, the socket list and the frame timer. Everything runs on
// one io_context thread.
class Hub {
 public:
  Hub(asio::io_context& io, const ServeConfig& config) : io_(io), config_(config), session_(config), timer_(io) {}

  void join(const std::shared_ptr<WsSession>& s) {
    sockets_.insert(s);
    s->send(std::make_shared<const std::string>(session_.config_message().dump()));
    s->send(std::make_shared<const std::string>(session_.state_message().dump()));
  }
  void leave(const std::shared_ptr<WsSession>& s) { sockets_.erase(s); }

  void on_message(const std::shared_ptr<WsSession>& from, std::string_view text) {
    if (auto reply = session_.handle(text)) {
      from->send(std::make_shared<const std::string>(reply->dump()));
    } else if (session_.paused() || session_.is_replay()) {
      broadcast();
    }
  }

  void start() { schedule(); }
  void stop() { timer_.cancel(); }
  [[nodiscard]] const ServeConfig& config() const { return config_; }

 private:
  void schedule() {
    const double period = 1.0 / (config_.fps * session_.speed());
    timer_.expires_after(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(period)));
    timer_.async_wait([this](beast::error_code ec) {
      if (ec) return;
      if (session_.advance()) broadcast();
      schedule();
    });
  }

  void broadcast() {
    const auto text = std::make_shared<const std::string>(session_.state_message().dump());
    for (const auto& s : sockets_) s->send(text);
  }

  asio::io_context& io_;
  ServeConfig config_;
  GameSession session_;
  asio::steady_timer timer_;
  std::set<std::shared_ptr<WsSession>> sockets_;
};

inline void WsSession::run(http::request<http::string_body> req) {
  ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
  ws_.async_accept(req, [self = shared_from_this()](beast::error_code ec) {
    if (ec) return;
    self->hub_.join(self);
    self->read();
  });
}

inline void WsSession::read() {
  ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
    if (ec) {
      self->hub_.leave(self);
      return;
    }
    const std::string text = beast::buffers_to_string(self->buffer_.data());
    self->buffer_.consume(self->buffer_.size());
    self->hub_.on_message(self, text);
    self->read();
  });
}

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket socket, Hub& hub) : stream_(std::move(socket)), hub_(hub) {}

  void run() { read(); }

 private:
  void read() {
    req_ = {};
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, req_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) return;
      self->dispatch();
    });
  }

  void dispatch() {
    if (websocket::is_upgrade(req_)) {
      if (req_.target() == "/ws") {
        stream_.expires_never();
        std::make_shared<WsSession>(stream_.release_socket(), hub_)->run(std::move(req_));
        return;
      }
    }
    respond(static_response());
  }

  http::response<http::string_body> static_response() const {
    auto make = [&](http::status status, std::string_view type, std::string body) {
      http::response<http::string_body> res{status, req_.version()};
      res.set(http::field::content_type, beast::string_view(type.data(), type.size()));
      res.keep_alive(req_.keep_alive());
      res.body() = std::move(body);
      res.prepare_payload();
      return res;
    };
    if (req_.method() != http::verb::get && req_.method() != http::verb::head) {
      return make(http::status::method_not_allowed, "text/plain", "method not allowed\n");
    }
    std::string target(req_.target());
    if (const auto q = target.find('?'); q != std::string::npos) target.resize(q);
    if (target.empty() || target.front() != '/' || target.find("..") != std::string::npos) {
      return make(http::status::bad_request, "text/plain", "bad path\n");
    }
    const std::string& dir = hub_.config().static_dir;
    if (dir.empty()) {
      if (target == "/" || target == "/index.html") return make(http::status::ok, "text/html", std::string(kIndexPage));
      return make(http::status::not_found, "text/plain", "not found\n");
    }
    std::filesystem::path path = std::filesystem::path(dir) / target.substr(1);
    if (target.back() == '/') path /= "index.html";
    std::ifstream in(path, std::ios::binary);
    if (!in) return make(http::status::not_found, "text/plain", "not found\n");
    std::stringstream body;
    body << in.rdbuf();
    return make(http::status::ok, mime_type(path), body.str());
  }

  void respond(http::response<http::string_body> res) {
    auto sp = std::make_shared<http::response<http::string_body>>(std::move(res));
    http::async_write(stream_, *sp, [self = shared_from_this(), sp](beast::error_code ec, std::size_t) {
      if (ec) return;
      if (!sp->keep_alive()) {
        beast::error_code ignored;
        self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
        return;
      }
      self->read();
    });
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> req_;
  Hub& hub_;
};

}  // namespace serve_detail

// Serves the viewer page at "/" and the game socket at "/ws" until stop().
class Server {
 public:
  explicit Server(ServeConfig config)
      : config_(std::move(config)),
        hub_(io_, config_),
        acceptor_(io_, {boost::asio::ip::make_address(config_.address), static_cast<unsigned short>(config_.port)}) {}

  [[nodiscard]] int port() const { return acceptor_.local_endpoint().port(); }

  void run() {
    hub_.start();
    accept();
    io_.run();
  }

  // Safe to call from any thread.
  void stop() {
    boost::asio::post(io_, [this] {
      hub_.stop();
      boost::system::error_code ignored;
      acceptor_.close(ignored);
      io_.stop();
    });
  }

 private:
  void accept() {
    acceptor_.async_accept([this](boost::system::error_code ec, serve_detail::tcp::socket socket) {
      if (ec) return;
      std::make_shared<serve_detail::HttpSession>(std::move(socket), hub_)->run();
      accept();
    });
  }

  ServeConfig config_;
  boost::asio::io_context io_;
  serve_detail::Hub hub_;
  serve_detail::tcp::acceptor acceptor_;
};

}  // namespace football
