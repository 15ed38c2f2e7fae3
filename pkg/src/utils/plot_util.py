#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Plot utility class, draws deformation graphs as SVG files
"""

import logging
from typing import List

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from src.utils.file_util import FileUtil  # noqa: E402

logger = logging.getLogger(__name__)


class PlotUtil:
    """Plot utility class"""

    @staticmethod
    def save_deformation_svg(file_path: str, betas, curves, title: str,
                             limit_values: List[float] = None) -> bool:
        """Draw one polyline per column against beta and save it as SVG

        Callers pass one column per distinct curve.

        Args:
            file_path (str): Output path
            betas (array-like): Ascending beta grid
            curves (array-like): Shape (grid, curves), one column per curve
            title (str): Plot title
            limit_values (list, optional): Curve values at beta -> 0, drawn at beta = 0

        Returns:
            bool: Whether the file was written
        """
        betas = np.asarray(betas, dtype=float)
        curves = np.asarray(curves, dtype=float)
        if curves.ndim == 1:
            curves = curves.reshape(len(betas), 1)
        if limit_values is not None:
            betas = np.concatenate(([0.0], betas))
            curves = np.vstack((np.asarray(limit_values, dtype=float), curves))

        FileUtil.ensure_parent_dir(file_path)
        fig, ax = plt.subplots(figsize=(8, 5))
        try:
            for column in range(curves.shape[1]):
                ax.plot(betas, curves[:, column], linewidth=0.8)
            ax.axhline(0.0, color="black", linewidth=0.6)
            ax.set_xlim(0.0, 2 * np.pi)
            ax.set_xticks([0, np.pi / 2, np.pi, 3 * np.pi / 2, 2 * np.pi])
            ax.set_xticklabels(["0", "π/2", "π", "3π/2", "2π"])
            ax.set_xlabel("beta")
            ax.set_ylabel("normalized height difference")
            ax.set_title(title)
            fig.savefig(file_path, format="svg", metadata={"Date": None})
            return True
        except (OSError, ValueError) as e:
            logger.error("Error writing plot %s: %s", file_path, e)
            return False
        finally:
            plt.close(fig)
