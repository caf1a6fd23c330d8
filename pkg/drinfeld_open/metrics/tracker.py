"""
SweepTracker: per-place records of a Frobenius sweep and their aggregate summary.
Supports CSV export and JSON export.
"""
import csv
import json
import time
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional


class SweepTracker:
    """
    Tracks one place sweep over a family.

    Per-place fields tracked:
    - place (str): place label "k:expr"
    - degree (int): degree of the closed point
    - rank (int or None): rank of the reduction, None on bad reduction
    - method (str): charpoly method, or "bad_reduction"
    - seconds (float): wall-clock time of the charpoly computation
    - n_x (int or None): number of roots of positive valuation at p_0
    - good (bool)
    - timestamp (str): ISO 8601 timestamp

    Aggregate summary:
    - total_places / good_places / bad_places
    - places_by_degree
    - n_x_histogram
    - mean_seconds / max_seconds
    """

    def __init__(self):
        self.places: List[Dict[str, Any]] = []
        self._start_time = time.time()

    def record_place(
        self,
        place: str,
        degree: int,
        rank: Optional[int],
        method: str,
        seconds: float,
        n_x: Optional[int],
        good: bool,
        extra: Optional[Dict[str, Any]] = None,
    ) -> None:
        """
        Record one visited place.

        Args:
            place: place label
            degree: degree of the closed point
            rank: rank of the reduced module (None when the reduction is bad)
            method: "motive", "torsion", "both" or "bad_reduction"
            seconds: time spent on the place
            n_x: Newton data at p_0 (None when the reduction is bad)
            good: whether the place contributed a FrobeniusData
            extra: optional additional fields
        """
        entry = {
            "index": len(self.places),
            "place": place,
            "degree": int(degree),
            "rank": int(rank) if rank is not None else None,
            "method": method,
            "seconds": float(seconds),
            "n_x": int(n_x) if n_x is not None else None,
            "good": bool(good),
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }
        if extra:
            entry.update(extra)
        self.places.append(entry)

    def get_summary(self) -> Dict[str, Any]:
        """
        Compute and return aggregate summary statistics.

        Returns:
            dict with aggregate sweep metrics
        """
        if not self.places:
            return {
                "total_places": 0,
                "good_places": 0,
                "bad_places": 0,
                "places_by_degree": {},
                "n_x_histogram": {},
                "mean_seconds": 0.0,
                "max_seconds": 0.0,
            }

        good = [p for p in self.places if p["good"]]
        by_degree: Dict[str, int] = {}
        for p in self.places:
            by_degree[str(p["degree"])] = by_degree.get(str(p["degree"]), 0) + 1
        n_x_hist: Dict[str, int] = {}
        for p in good:
            if p["n_x"] is not None:
                n_x_hist[str(p["n_x"])] = n_x_hist.get(str(p["n_x"]), 0) + 1
        seconds = [p["seconds"] for p in self.places]

        return {
            "total_places": len(self.places),
            "good_places": len(good),
            "bad_places": len(self.places) - len(good),
            "places_by_degree": by_degree,
            "n_x_histogram": n_x_hist,
            "mean_seconds": round(sum(seconds) / len(seconds), 4),
            "max_seconds": round(max(seconds), 4),
            "total_wall_time_s": round(time.time() - self._start_time, 2),
        }

    def to_csv(self, filepath: str) -> None:
        """
        Write all place records to a CSV file.

        Args:
            filepath: path to output CSV file
        """
        if not self.places:
            return

        fieldnames = list(self.places[0].keys())

        with open(filepath, "w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames, extrasaction="ignore")
            writer.writeheader()
            for place in self.places:
                writer.writerow(place)

    def to_json(self, filepath: str) -> None:
        """
        Write summary and all place records to a JSON file.

        Args:
            filepath: path to output JSON file
        """
        output = {
            "summary": self.get_summary(),
            "places": self.places,
        }
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(output, f, indent=2, default=str)

    def clear(self) -> None:
        """Clear all recorded places."""
        self.places = []
        self._start_time = time.time()

    def __len__(self) -> int:
        return len(self.places)

    def __repr__(self) -> str:
        summary = self.get_summary()
        return (
            f"SweepTracker("
            f"places={summary['total_places']}, "
            f"good={summary['good_places']}, "
            f"bad={summary['bad_places']})"
        )
