"""HTTP service layer (FastAPI app in :mod:`landau.service.app`)."""
