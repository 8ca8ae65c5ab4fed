"""HTTP service exposing the toolkit.

Every endpoint is a stateless wrapper over the library; the CLI drives the
same app in-process, so both surfaces share one validation and error path.
Domain errors map to structured JSON: invalid input is 400, a tripped search
guard is 422, each with a machine-readable ``code``.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..analysis import (ComponentMode, SpannerMode, clique_to_component_instance,
                        max_temporal_component, min_spanner)
from ..errors import GuardExceededError, InvalidGraphError
from ..expressivity import realize, verify_all_separations
from ..fixtures import FIXTURES, get_fixture
from ..graphs import (SettingClass, Strictness, contacts_count, is_happy, is_proper,
                      is_simple)
from ..reachability import ReachabilityGraph, closure
from ..serialize import closure_dot
from ..transforms import dilate, saturate, semaphore
from .schemas import (CheckResponse, ClosureModel, ClosureRequest, ClosureResponse,
                      ComponentRequest, ComponentResponse, FixtureResponse,
                      RealizeRequest, RealizeResponse, ReduceRequest, ReduceResponse,
                      SeparationCertificate, SpannerRequest, SpannerResponse,
                      TemporalGraphModel, TransformRequest, TransformResponse)

app = FastAPI(title="tempograph", version=__version__)

_TRANSFORMS = {"dilate": dilate, "saturate": saturate, "semaphore": semaphore}


@app.exception_handler(InvalidGraphError)
async def _invalid_input(_: Request, exc: InvalidGraphError) -> JSONResponse:
    return JSONResponse(status_code=400,
                        content={"code": "invalid-input", "message": str(exc)})


@app.exception_handler(GuardExceededError)
async def _guard_exceeded(_: Request, exc: GuardExceededError) -> JSONResponse:
    return JSONResponse(status_code=422,
                        content={"code": "guard-exceeded", "message": str(exc)})


def _enum(cls, text: str):
    try:
        return cls(text)
    except ValueError:
        choices = sorted(m.value for m in cls)
        raise InvalidGraphError(f"unknown {cls.__name__.lower()} {text!r}; expected one of {choices}")


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/check", response_model=CheckResponse)
def check(req: TemporalGraphModel) -> CheckResponse:
    g = req.unwrap()
    return CheckResponse(
        n=g.n,
        contacts=contacts_count(g),
        proper=is_proper(g),
        simple=is_simple(g),
        happy=is_happy(g),
        tc_strict=closure(g, Strictness.STRICT).is_complete(),
        tc_nonstrict=closure(g, Strictness.NON_STRICT).is_complete(),
    )


@app.post("/closure", response_model=ClosureResponse, response_model_exclude_none=True)
def closure_route(req: ClosureRequest) -> ClosureResponse:
    g = req.graph.unwrap()
    r = closure(g, Strictness.parse(req.strictness))
    dot = closure_dot(r, g.names, collapse_mutual=True) if req.dot else None
    return ClosureResponse(closure=ClosureModel.wrap(r), dot=dot)


@app.post("/transform/{name}", response_model=TransformResponse,
          response_model_exclude_none=True)
def transform(name: str, req: TransformRequest) -> TransformResponse:
    if name not in _TRANSFORMS:
        raise InvalidGraphError(f"unknown transform {name!r}; expected one of {sorted(_TRANSFORMS)}")
    g = req.graph.unwrap()
    rep = _TRANSFORMS[name](g) if name == "saturate" else _TRANSFORMS[name](g, req.method)
    return TransformResponse(
        transform=rep.transform,
        graph=TemporalGraphModel.wrap(rep.graph),
        sigma=list(rep.sigma),
        stats=rep.stats,
    )


@app.post("/spanner", response_model=SpannerResponse)
def spanner(req: SpannerRequest) -> SpannerResponse:
    g = req.graph.unwrap()
    kwargs = {} if req.guard is None else {"guard": req.guard}
    size, witness = min_spanner(g, Strictness.parse(req.strictness),
                                _enum(SpannerMode, req.mode), **kwargs)
    return SpannerResponse(size=size, witness=TemporalGraphModel.wrap(witness))


@app.post("/component", response_model=ComponentResponse)
def component(req: ComponentRequest) -> ComponentResponse:
    g = req.graph.unwrap()
    size, vertices = max_temporal_component(g, Strictness.parse(req.strictness),
                                            _enum(ComponentMode, req.mode), guard=req.guard)
    return ComponentResponse(size=size, vertices=list(vertices))


@app.post("/reduce-clique", response_model=ReduceResponse)
def reduce_clique(req: ReduceRequest) -> ReduceResponse:
    inst = clique_to_component_instance(req.graph.unwrap(), req.method)
    return ReduceResponse(
        graph=TemporalGraphModel.wrap(inst.graph),
        originals=list(inst.originals),
        auxiliaries=list(inst.auxiliaries),
        input_edges=inst.input_edge_count,
    )


@app.post("/realize", response_model=RealizeResponse, response_model_exclude_none=False)
def realize_route(req: RealizeRequest) -> RealizeResponse:
    witness, scanned = realize(req.target.unwrap(), SettingClass.parse(req.setting))
    return RealizeResponse(
        witness=None if witness is None else TemporalGraphModel.wrap(witness),
        scanned=scanned,
    )


@app.get("/separations", response_model=list[SeparationCertificate],
         response_model_exclude_none=False)
def separations() -> list[SeparationCertificate]:
    return [SeparationCertificate.model_validate(cert) for cert in verify_all_separations()]


@app.get("/fixtures", response_model=list[str])
def fixtures() -> list[str]:
    return sorted(FIXTURES)


@app.get("/fixtures/{name}", response_model=FixtureResponse)
def fixture(name: str) -> FixtureResponse:
    fx = get_fixture(name)
    return FixtureResponse(
        name=fx.name,
        description=fx.description,
        graph=TemporalGraphModel.wrap(fx.graph),
        closures={s.value: ClosureModel.wrap(ReachabilityGraph(fx.graph.n, arcs))
                  for s, arcs in fx.expected_closures.items()},
    )


def serve(host: str = "127.0.0.1", port: int = 8000) -> None:
    """Run the service under uvicorn; blocks until interrupted."""
    import uvicorn

    uvicorn.run(app, host=host, port=port, log_level="info")
