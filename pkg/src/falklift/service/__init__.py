"""HTTP layer: FastAPI app in `falklift.service.app`, models in
`falklift.service.schemas`."""
