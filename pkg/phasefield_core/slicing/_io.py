import csv


def write_curves_csv(curves, filepath):
    """
    Write slice curves as polylines with columns z..., t, vertex_index, y1, y2.
    """
    curves = list(curves)
    nz = len(curves[0].z) if curves else 0
    with open(filepath, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow([f"z{i + 1}" for i in range(nz)] + ["t", "vertex_index", "y1", "y2"])
        for c in curves:
            writer.writerows(c.to_rows())


def write_classification_csv(classes, filepath):
    """
    Write fiber classifications with columns z..., in_D, in_Q, in_D_prime.
    """
    classes = list(classes)
    nz = len(classes[0].z) if classes else 0
    with open(filepath, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow([f"z{i + 1}" for i in range(nz)] + ["in_D", "in_Q", "in_D_prime"])
        for c in classes:
            writer.writerow(c.to_row())
