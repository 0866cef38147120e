"""
转储存储模块
"""

from .artifact_store import ArtifactStore, FORMAT_VERSION

__all__ = ['ArtifactStore', 'FORMAT_VERSION']
