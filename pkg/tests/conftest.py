import socket
import threading
import time

import pytest
from fastapi.testclient import TestClient

from gapoera.service import create_app
from gapoera.session import SessionStore


@pytest.fixture()
def store():
    return SessionStore()


@pytest.fixture()
def api(store):
    with TestClient(create_app(store=store)) as client:
        yield client


@pytest.fixture(scope="session")
def live_server():
    """Real uvicorn server on an ephemeral port, shared across the session."""
    import uvicorn

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    sock.bind(("127.0.0.1", 0))
    port = sock.getsockname()[1]

    server = uvicorn.Server(uvicorn.Config(create_app(), log_level="error"))
    thread = threading.Thread(target=server.run, kwargs={"sockets": [sock]}, daemon=True)
    thread.start()
    deadline = time.monotonic() + 10
    while not server.started:
        if time.monotonic() > deadline:
            raise RuntimeError("server did not start")
        time.sleep(0.02)
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=10)
